#pragma once

// Witness search for H^1(S, mL) != 0.  The direct construction picks the
// degree-m and degree-m' monomials with b = c and a - c in {1, 2, 3}, pins
// lambda from the resulting character equation, and scans mu through the
// seven unit conditions; the exhaustive sweep tries every unit pair.
// Certificates carry everything an independent checker needs.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "beauville/surface.hpp"

namespace beauville {

enum class Strategy {
    Direct,
    Exhaustive,
};

struct ConditionRecord {
    std::string expr;
    std::int64_t value = 0;
    bool is_unit = false;

    bool operator==(const ConditionRecord&) const = default;
};

struct Certificate {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;
    std::array<std::int64_t, 4> psi_std{};  // row-major [[a, b], [c, d]]
    Monomial deg_m;
    Monomial deg_mprime;
    Direction direction = Direction::ChiEqPhiChiPrime;
    std::int64_t h1_claimed = 0;
    std::vector<ConditionRecord> seven_conditions;
    Strategy strategy = Strategy::Direct;
};

// Builds a certificate proving h^1(S, mL) >= 1 over Z/n.
// pre: n >= 7, gcd(n, 30) = 1, 1 <= m <= n-4.
// Falls back to the exhaustive sweep if the mu scan comes up empty (it
// cannot under the precondition); NoMuFound only when that fails too.
Certificate find_witness(Modulus n, std::int64_t m);

struct SearchHit {
    std::int64_t lambda = 0;
    std::int64_t mu = 0;
    std::int64_t h1 = 0;

    bool operator==(const SearchHit&) const = default;
};

struct SearchReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::vector<SearchHit> found;  // sorted by (lambda, mu)
    Strategy strategy = Strategy::Exhaustive;
};

// Every unit pair passing the seven conditions, each with its h^1(S, mL).
// pre: gcd(n, 6) = 1, 1 <= m <= n-4.  Output is identical for any jobs
// count.
SearchReport exhaustive_search(Modulus n, std::int64_t m, int jobs = 1);

struct VerifyResult {
    bool ok = false;
    std::vector<std::string> reasons;
};

// Independent re-check of a certificate: constraints, derived psi matrix,
// both freeness checks, the witness equation, and the h1 bound.  Never
// throws; failures land in reasons.
VerifyResult verify_certificate(const Certificate& cert);

struct Beauville5Row {
    std::array<std::int64_t, 4> psi_std{};
    std::int64_t q = 0;
    std::int64_t h0_l = 0;
    std::int64_t h1_l = 0;
    std::int64_t h2_l = 0;
};

struct Beauville5Report {
    std::int64_t total_matrices = 0;
    std::int64_t free_count = 0;
    std::int64_t diagonal_free_count = 0;
    SurfaceNumerics numerics;
    std::vector<Beauville5Row> q0_rows;
    std::vector<Beauville5Row> q_positive_rows;
    // free_count >= 1, no free diagonal unit pair, and every q = 0 row has
    // h^0(L) = h^1(L) = 0.
    bool vanishing_verified = false;
};

// Enumerates all 625 candidate psi matrices over Z/5, keeps the free ones,
// and records q and the cohomology of L for each.
Beauville5Report beauville5_report(int jobs = 1);

}  // namespace beauville
