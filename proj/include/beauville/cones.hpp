#pragma once

// Graded cones over a quotient surface: for a polarization degree d the cone
// is Spec of R = bigoplus_i H^0(S, i*d*L).  Cohen-Macaulayness of these
// three-dimensional cones reduces to vanishing of h^1(S, mL) at the graded
// degrees m = i*d that land in the window [1, r-1]; everything outside the
// window vanishes for free configurations with q = 0.

#include <cstdint>
#include <vector>

#include "beauville/surface.hpp"

namespace beauville {

struct ConeOffender {
    std::int64_t m = 0;
    std::int64_t h1 = 0;

    bool operator==(const ConeOffender&) const = default;
};

struct CmVerdict {
    bool cohen_macaulay = true;
    // Offending degrees (m, h1(mL)) inside the window; empty iff CM.
    std::vector<ConeOffender> offenders;
};

// Entry i is h^0(S, i*d*L), for i = 0..max_index.
// pre: cfg.free(), d >= 1, max_index >= 0.
std::vector<std::int64_t> hilbert_function(const SurfaceConfig& cfg, std::int64_t d,
                                           std::int64_t max_index);

// Cohen-Macaulay iff h^1(i*d*L) = 0 for every multiple i*d in [1, r-1].
// pre: cfg.free() and q(S) = h1_surface(0) = 0.
CmVerdict cm_verdict(const SurfaceConfig& cfg, std::int64_t d);

// Order of the canonical class in Pic modulo the polarization tL given
// K = rL: the smallest j > 0 with t | j*r, which is t / gcd(r, t).
std::int64_t dualizing_order(std::int64_t r, std::int64_t t);

struct ConeReport {
    std::int64_t d = 0;
    std::vector<std::int64_t> hilbert;
    CmVerdict cm;
    std::int64_t dualizing_order = 0;
    // d equals r and the verdict is CM: the cone over the canonical class.
    bool gorenstein_hint = false;
};

ConeReport cone_report(const SurfaceConfig& cfg, std::int64_t d, std::int64_t max_index);

// The three cones of interest: Y over L, Z over K = rL, X over K + L.
struct ThreeCones {
    ConeReport y;
    ConeReport z;
    ConeReport x;
};

ThreeCones three_cones_report(const SurfaceConfig& cfg, std::int64_t max_index);

}  // namespace beauville
