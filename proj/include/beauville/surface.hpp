#pragma once

// Beauville-type surface configurations S = (C x C) / (Id x psi)(G).
//
// A configuration is a modulus n with gcd(n, 6) = 1 and a homomorphism
// psi: G -> G. The group element g acts on C x C as (g, psi(g)); the
// action is free exactly when psi maps every element of Sigma* (the
// nonzero elements with fixed points on C) outside Sigma.
//
// Cohomology of O_S(mL) for the descended polarization L is computed by
// counting G-invariant character pairs in the Kuenneth decomposition of
// O_{CxC}(m, m). Everything is an exact integer count.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "beauville/characters.hpp"
#include "beauville/fermat.hpp"

namespace beauville {

// Row-major 2x2 matrix [[a, b], [c, d]] over Z/n.
struct Mat2 {
    Residue a, b, c, d;

    Modulus modulus() const noexcept { return a.modulus(); }

    std::array<std::int64_t, 4> values() const noexcept {
        return {a.value(), b.value(), c.value(), d.value()};
    }

    friend bool operator==(const Mat2& lhs, const Mat2& rhs) {
        return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c && lhs.d == rhs.d;
    }
    friend bool operator!=(const Mat2& lhs, const Mat2& rhs) { return !(lhs == rhs); }
};

Mat2 mat2_mul(const Mat2& lhs, const Mat2& rhs);
Mat2 mat2_transpose(const Mat2& m);

// The pair (psi on points, phi = psi-dual on characters). phi is stored
// in the v-basis; the standard-basis matrix of psi is derived from it by
// conjugating with the basis change and transposing.
class GroupHom {
  public:
    // phi = diag(lambda, mu) in the v-basis. Throws NotAUnit.
    static GroupHom diagonal(Residue lambda, Residue mu);
    static GroupHom from_phi_v(const Mat2& phi_v);
    static GroupHom from_psi_std(const Mat2& psi_std);

    const Mat2& phi_v() const noexcept { return phi_v_; }
    const Mat2& psi_std() const noexcept { return psi_std_; }
    Modulus modulus() const noexcept { return phi_v_.modulus(); }

    CharacterV apply_phi(const CharacterV& chi) const;
    std::pair<Residue, Residue> apply_psi(Residue u, Residue v) const;

    bool is_diagonal_v() const noexcept;
    bool is_invertible() const noexcept;  // det phi a unit

    // Diagonal entries of phi_v; only meaningful when is_diagonal_v().
    Residue lambda() const noexcept { return phi_v_.a; }
    Residue mu() const noexcept { return phi_v_.d; }

  private:
    GroupHom(Mat2 phi_v, Mat2 psi_std) : phi_v_(phi_v), psi_std_(psi_std) {}

    Mat2 phi_v_;
    Mat2 psi_std_;
};

GroupHom diagonal_hom(Residue lambda, Residue mu);

// Standard-basis matrix of psi; for diagonal phi this is the closed form
// 3^{-1} [[4l - m, 2(m - l)], [2(l - m), 4m - l]].
Mat2 psi_standard_matrix(const GroupHom& hom);

// Sigma: union of the cyclic subgroups generated by (1,0), (0,1), (1,1)
// in standard coordinates, sorted; size 3n - 2.
std::vector<std::pair<std::int64_t, std::int64_t>> sigma_set(Modulus n);

// True iff psi(g) lies outside Sigma for every g in Sigma \ {0}. Note
// that 0 is in Sigma, so psi(g) = 0 also fails: the identity fixes
// everything on the second factor.
bool is_free_action(const GroupHom& hom, Modulus n);

// The seven residues whose unit status decides freeness of a diagonal
// hom with unit eigenvalues.
struct UnitCondition {
    const char* expr;
    std::int64_t value;
    bool unit;
};

std::array<UnitCondition, 7> seven_unit_conditions_detail(Residue lambda, Residue mu);
bool seven_unit_conditions(Residue lambda, Residue mu);

class SurfaceConfig {
  public:
    // Requires gcd(n, 6) = 1 and hom over the same modulus.
    SurfaceConfig(Modulus n, GroupHom hom);

    Modulus n() const noexcept { return n_; }
    const GroupHom& hom() const noexcept { return hom_; }
    bool free() const noexcept { return free_; }
    std::int64_t r() const noexcept { return n_.value() - 3; }

  private:
    Modulus n_;
    GroupHom hom_;
    bool free_;
};

// Which Kuenneth summand of H^1(O_{CxC}(m,m)) a witness pair lives in.
enum class Direction {
    ChiEqPhiChiPrime,   // H^0(m) tensor H^1(m): chi = phi(chi')
    ChiPrimeEqPhiChi,   // H^1(m) tensor H^0(m): chi' = phi(chi)
};

struct H1Witness {
    Monomial deg_m;       // degree m
    Monomial deg_mprime;  // degree n-3-m
    Direction direction;
};

struct H1Count {
    std::int64_t dim = 0;
    std::vector<H1Witness> witnesses;
};

// dim H^1(O_S(mL)) with one witness per contributing pair, counted by a
// keyed lookup over the dual-degree characters. 0 <= m <= n-3.
H1Count h1_surface(std::int64_t m, const SurfaceConfig& cfg);

// dim H^0(O_S(mL)) = #{(chi, tau) of degree m : chi + phi(tau) = 0}.
std::int64_t h0_surface(std::int64_t m, const SurfaceConfig& cfg);

struct CohomRow {
    std::int64_t m = 0;
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    std::int64_t h2 = 0;
    std::int64_t chi = 0;

    friend bool operator==(const CohomRow&, const CohomRow&) = default;
};

// For 0 <= m <= r: direct counts with h2 via Serre duality and chi from
// Riemann-Roch. For m > r: h1 = h2 = 0 and h0 = chi (Kodaira vanishing).
CohomRow cohomology_row(std::int64_t m, const SurfaceConfig& cfg);

struct SurfaceNumerics {
    std::int64_t Lsq = 0;
    std::int64_t Ksq = 0;
    std::int64_t chiO = 0;
    std::int64_t r = 0;
};

// L^2 = 2, K^2 = 2(n-3)^2, chi(O_S) = (1 - g)^2 / n^2 (exact; throws
// NonIntegralChi if the division is not exact), r = n-3.
SurfaceNumerics surface_numerics(Modulus n);

}  // namespace beauville
