#include <cstdint>
#include <set>

#include "doctest.h"

#include "beauville/fermat.hpp"

using namespace beauville;

TEST_CASE("eigenbasis size is the monomial count") {
    const Modulus n(7);
    for (std::int64_t m = 0; m <= 4; ++m) {
        CHECK(h0_eigenbasis(m, n).size() == (m + 1) * (m + 2) / 2);
    }
    CHECK_THROWS_AS(h0_eigenbasis(5, n), DegreeOutOfRange);
    CHECK_THROWS_AS(h0_eigenbasis(-1, n), DegreeOutOfRange);
}

TEST_CASE("characters within a degree are pairwise distinct") {
    for (std::int64_t n_value : {5, 7, 11, 13}) {
        const Modulus n(n_value);
        for (std::int64_t m = 0; m <= n_value - 3; ++m) {
            const EigenBasis& basis = h0_eigenbasis(m, n);
            std::set<std::int64_t> keys;
            for (const EigenEntry& e : basis.entries) {
                keys.insert(e.chi.key());
            }
            CHECK(keys.size() == basis.entries.size());
        }
    }
}

TEST_CASE("memoized bases are stable references") {
    const Modulus n(7);
    CHECK(&h0_eigenbasis(3, n) == &h0_eigenbasis(3, n));
}

TEST_CASE("genus matches the plane-curve formula and the top eigenbasis") {
    for (std::int64_t n_value : {5, 7, 11, 13}) {
        const Modulus n(n_value);
        CHECK(genus(n) == (n_value - 1) * (n_value - 2) / 2);
        // h^0 of the canonical twist has dimension g
        CHECK(h0_eigenbasis(n_value - 3, n).size() == genus(n));
    }
}

TEST_CASE("curve Riemann-Roch holds degree by degree") {
    for (std::int64_t n_value : {5, 7, 11, 13}) {
        const Modulus n(n_value);
        const std::int64_t g = genus(n);
        for (std::int64_t m = 0; m <= n_value - 3; ++m) {
            const std::int64_t h0 = h0_eigenbasis(m, n).size();
            const std::int64_t h1 = static_cast<std::int64_t>(h1_characters(m, n).size());
            CHECK(h0 - h1 == n_value * m + 1 - g);
        }
    }
}

TEST_CASE("h1 characters negate the dual degree") {
    const Modulus n(5);
    const auto h1 = h1_characters(1, n);
    REQUIRE(h1.size() == 3);
    CHECK((h1[0].s.value() == 1 && h1[0].t.value() == 1));
    CHECK((h1[1].s.value() == 0 && h1[1].t.value() == 4));
    CHECK((h1[2].s.value() == 4 && h1[2].t.value() == 0));
}
