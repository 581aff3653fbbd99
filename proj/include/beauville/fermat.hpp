#pragma once

// Equivariant cohomology of O_C(m) on the degree-n Fermat curve.
//
// For 0 <= m <= n-3 the sections of O_C(m) split into one-dimensional
// eigenspaces, one per monomial x^a y^b z^c of degree m; H^1 is Serre-dual
// to the sections of degree n-3-m with negated characters. Degrees above
// n-3 would require quotienting by the Fermat relation and are rejected.

#include <cstdint>
#include <vector>

#include "beauville/characters.hpp"

namespace beauville {

struct EigenEntry {
    Monomial mon;
    CharacterV chi;
};

// Full eigenbasis of H^0(O_C(m)): entries ordered lexicographically by
// (a, b), one per monomial of degree m, (m+1)(m+2)/2 in total.
struct EigenBasis {
    std::int64_t degree = 0;
    std::vector<EigenEntry> entries;

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(entries.size()); }
};

// Memoized per (n, m); safe for concurrent readers. Throws
// DegreeOutOfRange unless 0 <= m <= n-3.
const EigenBasis& h0_eigenbasis(std::int64_t m, Modulus n);

// Characters of H^1(O_C(m)): the negatives of the degree-(n-3-m) monomial
// characters, in the eigenbasis order of the dual degree.
std::vector<CharacterV> h1_characters(std::int64_t m, Modulus n);

// (n-1)(n-2)/2, the number of degree-(n-3) monomials.
std::int64_t genus(Modulus n);

}  // namespace beauville
