#include <algorithm>
#include <array>
#include <cstdint>

#include "doctest.h"

#include "beauville/surface.hpp"
#include "support/oracles.hpp"

using namespace beauville;

namespace {

SurfaceConfig diagonal_config(std::int64_t n_value, std::int64_t lambda,
                              std::int64_t mu) {
    const Modulus n(n_value);
    return {n, GroupHom::diagonal(Residue(lambda, n), Residue(mu, n))};
}

}  // namespace

TEST_CASE("diagonal hom derives the documented psi matrix") {
    const Modulus n(7);
    const GroupHom hom = GroupHom::diagonal(Residue(1, n), Residue(2, n));
    CHECK(hom.psi_std().values() == std::array<std::int64_t, 4>{3, 3, 4, 0});
    CHECK(hom.is_diagonal_v());
    CHECK(hom.is_invertible());
    CHECK(hom.lambda().value() == 1);
    CHECK(hom.mu().value() == 2);
    CHECK_THROWS_AS(GroupHom::diagonal(Residue(0, n), Residue(2, n)), NotAUnit);
}

TEST_CASE("psi matches the closed form on all unit pairs") {
    for (std::int64_t n_value : {7, 11}) {
        const Modulus n(n_value);
        const Residue third = inv3(n);
        const Residue two(2, n);
        const Residue four(4, n);
        for (std::int64_t l = 1; l < n_value; ++l) {
            for (std::int64_t u = 1; u < n_value; ++u) {
                const Residue lambda(l, n);
                const Residue mu(u, n);
                const Mat2 expected{third * (four * lambda - mu),
                                    third * (two * (mu - lambda)),
                                    third * (two * (lambda - mu)),
                                    third * (four * mu - lambda)};
                CHECK(GroupHom::diagonal(lambda, mu).psi_std() == expected);
            }
        }
    }
}

TEST_CASE("phi_v and psi_std determine each other") {
    const Modulus n(7);
    for (std::int64_t a = 0; a < 7; ++a) {
        for (std::int64_t b = 0; b < 7; ++b) {
            for (std::int64_t c = 0; c < 7; ++c) {
                for (std::int64_t d = 0; d < 7; ++d) {
                    const Mat2 m{Residue(a, n), Residue(b, n), Residue(c, n),
                                 Residue(d, n)};
                    const GroupHom hom = GroupHom::from_psi_std(m);
                    CHECK(hom.psi_std() == m);
                    CHECK(GroupHom::from_phi_v(hom.phi_v()).psi_std() == m);
                }
            }
        }
    }
}

TEST_CASE("apply_phi acts by the v-basis matrix") {
    const Modulus n(7);
    const GroupHom hom = GroupHom::diagonal(Residue(5, n), Residue(2, n));
    const CharacterV chi{Residue(3, n), Residue(4, n)};
    const CharacterV image = hom.apply_phi(chi);
    CHECK(image.s.value() == 1);
    CHECK(image.t.value() == 1);
}

TEST_CASE("sigma set is the three coordinate lines") {
    for (std::int64_t n_value : {5, 7, 11}) {
        const Modulus n(n_value);
        const auto sigma = sigma_set(n);
        CHECK(static_cast<std::int64_t>(sigma.size()) == 3 * n_value - 2);
        CHECK(std::is_sorted(sigma.begin(), sigma.end()));
        for (std::int64_t u = 0; u < n_value; ++u) {
            for (std::int64_t v = 0; v < n_value; ++v) {
                const bool expected = u == 0 || v == 0 || u == v;
                const bool member =
                    std::binary_search(sigma.begin(), sigma.end(), std::pair{u, v});
                CHECK(member == expected);
            }
        }
    }
}

TEST_CASE("seven unit conditions match the set-based freeness check") {
    for (std::int64_t n_value : {5, 7, 11, 13, 17, 25}) {
        const Modulus n(n_value);
        for (std::int64_t l = 1; l < n_value; ++l) {
            for (std::int64_t u = 1; u < n_value; ++u) {
                if (!n.coprime_to(l) || !n.coprime_to(u)) {
                    continue;
                }
                const Residue lambda(l, n);
                const Residue mu(u, n);
                const bool seven = seven_unit_conditions(lambda, mu);
                const bool set_based = is_free_action(GroupHom::diagonal(lambda, mu), n);
                CHECK(seven == set_based);
            }
        }
    }
}

TEST_CASE("every unit lambda admits a passing mu when n >= 7") {
    for (std::int64_t n_value : {7, 11, 13, 17}) {
        const Modulus n(n_value);
        for (std::int64_t l = 1; l < n_value; ++l) {
            bool found = false;
            for (std::int64_t u = 1; u < n_value && !found; ++u) {
                found = seven_unit_conditions(Residue(l, n), Residue(u, n));
            }
            CHECK(found);
        }
    }
}

TEST_CASE("condition expressions are stable") {
    const Modulus n(7);
    const auto detail = seven_unit_conditions_detail(Residue(5, n), Residue(2, n));
    const char* expected[7] = {"lambda",     "mu",         "lambda-4mu", "lambda-mu",
                               "mu-4lambda", "lambda+2mu", "2lambda+mu"};
    for (int i = 0; i < 7; ++i) {
        CHECK(std::string(detail[i].expr) == expected[i]);
        CHECK(detail[i].unit);
    }
}

TEST_CASE("surface counts match the double-loop oracle") {
    const std::int64_t n_value = 7;
    const Modulus n(n_value);
    for (std::int64_t l = 1; l < n_value; ++l) {
        for (std::int64_t u = 1; u < n_value; ++u) {
            const SurfaceConfig cfg = diagonal_config(n_value, l, u);
            for (std::int64_t m = 0; m <= cfg.r(); ++m) {
                CHECK(h1_surface(m, cfg).dim == oracles::h1_pairs(n_value, m, l, u));
                CHECK(h0_surface(m, cfg) == oracles::h0_pairs(n_value, m, l, u));
            }
        }
    }
}

TEST_CASE("h1 witnesses satisfy their own equations") {
    const SurfaceConfig cfg = diagonal_config(7, 5, 2);
    for (std::int64_t m = 0; m <= cfg.r(); ++m) {
        const H1Count count = h1_surface(m, cfg);
        CHECK(count.dim == static_cast<std::int64_t>(count.witnesses.size()));
        for (const H1Witness& w : count.witnesses) {
            CHECK(w.deg_m.degree() == m);
            CHECK(w.deg_mprime.degree() == cfg.r() - m);
            const CharacterV chi = monomial_character(w.deg_m, cfg.n());
            const CharacterV chip = monomial_character(w.deg_mprime, cfg.n());
            if (w.direction == Direction::ChiEqPhiChiPrime) {
                CHECK(chi == cfg.hom().apply_phi(chip));
            } else {
                CHECK(chip == cfg.hom().apply_phi(chi));
            }
        }
    }
}

TEST_CASE("Riemann-Roch and duality hold on a verified configuration") {
    const SurfaceConfig cfg = diagonal_config(7, 5, 2);
    REQUIRE(cfg.free());
    const SurfaceNumerics numerics = surface_numerics(cfg.n());
    CHECK(numerics.Lsq == 2);
    CHECK(numerics.Ksq == 32);
    CHECK(numerics.chiO == 4);
    CHECK(numerics.r == 4);
    CHECK(h1_surface(0, cfg).dim == 0);
    for (std::int64_t m = 0; m <= cfg.r(); ++m) {
        const CohomRow row = cohomology_row(m, cfg);
        CHECK(row.h0 - row.h1 + row.h2 == row.chi);
        CHECK(row.chi == numerics.chiO + m * (m - cfg.r()));
        CHECK(row.h1 == h1_surface(cfg.r() - m, cfg).dim);
        CHECK(row.h2 == h0_surface(cfg.r() - m, cfg));
    }
}

TEST_CASE("twists beyond r have no higher cohomology") {
    const SurfaceConfig cfg = diagonal_config(7, 5, 2);
    const CohomRow row = cohomology_row(5, cfg);
    CHECK(row.h0 == 9);
    CHECK(row.h1 == 0);
    CHECK(row.h2 == 0);
    CHECK(row.chi == 9);
    CHECK_THROWS_AS(cohomology_row(-1, cfg), PreconditionViolated);
}

TEST_CASE("surface numerics at small degrees") {
    const struct {
        std::int64_t n, Lsq, Ksq, chiO, r;
    } expected[] = {{5, 2, 8, 1, 2}, {7, 2, 32, 4, 4}, {11, 2, 128, 16, 8}};
    for (const auto& e : expected) {
        const SurfaceNumerics got = surface_numerics(Modulus(e.n));
        CHECK(got.Lsq == e.Lsq);
        CHECK(got.Ksq == e.Ksq);
        CHECK(got.chiO == e.chiO);
        CHECK(got.r == e.r);
    }
    CHECK_THROWS_AS(surface_numerics(Modulus(8)), PreconditionViolated);
}

TEST_CASE("surfaces need n coprime to 6") {
    const Modulus n(8);
    const GroupHom hom = GroupHom::diagonal(Residue(1, n), Residue(3, n));
    CHECK_THROWS_AS(SurfaceConfig(n, hom), PreconditionViolated);
}

TEST_CASE("configs reject mismatched moduli") {
    const Modulus n7(7);
    const Modulus n11(11);
    const GroupHom hom = GroupHom::diagonal(Residue(1, n11), Residue(2, n11));
    CHECK_THROWS_AS(SurfaceConfig(n7, hom), ModulusMismatch);
}
