#include <cstdint>

#include "doctest.h"

#include "beauville/cones.hpp"
#include "beauville/search.hpp"

using namespace beauville;

namespace {

SurfaceConfig witness_config() {
    const Modulus n(7);
    return {n, GroupHom::diagonal(Residue(5, n), Residue(2, n))};
}

SurfaceConfig config_from_row(const Beauville5Row& row) {
    const Modulus n(5);
    const Mat2 psi{Residue(row.psi_std[0], n), Residue(row.psi_std[1], n),
                   Residue(row.psi_std[2], n), Residue(row.psi_std[3], n)};
    return {n, GroupHom::from_psi_std(psi)};
}

}  // namespace

TEST_CASE("dualizing order is t over gcd(r, t)") {
    CHECK(dualizing_order(4, 5) == 5);
    CHECK(dualizing_order(4, 4) == 1);
    CHECK(dualizing_order(6, 9) == 3);
    CHECK(dualizing_order(4, 1) == 1);
    CHECK(dualizing_order(8, 6) == 3);
    CHECK_THROWS_AS(dualizing_order(0, 1), PreconditionViolated);
    CHECK_THROWS_AS(dualizing_order(4, 0), PreconditionViolated);
}

TEST_CASE("hilbert entries follow the cohomology table") {
    const SurfaceConfig cfg = witness_config();
    const auto h = hilbert_function(cfg, 1, 6);
    REQUIRE(h.size() == 7);
    CHECK(h[0] == 1);
    CHECK(h[5] == 9);
    CHECK(h[6] == 16);
    for (std::size_t i = 0; i < h.size(); ++i) {
        CHECK(h[i] == cohomology_row(static_cast<std::int64_t>(i), cfg).h0);
    }
    const auto hz = hilbert_function(cfg, 4, 1);
    CHECK(hz[0] == 1);
    CHECK(hz[1] == 3);
    CHECK_THROWS_AS(hilbert_function(cfg, 0, 3), PreconditionViolated);
    CHECK_THROWS_AS(hilbert_function(cfg, 1, -1), PreconditionViolated);
}

TEST_CASE("cones over d >= r are Cohen-Macaulay, the witness cone over L is not") {
    const SurfaceConfig cfg = witness_config();
    const CmVerdict y = cm_verdict(cfg, 1);
    CHECK_FALSE(y.cohen_macaulay);
    REQUIRE(!y.offenders.empty());
    for (const ConeOffender& o : y.offenders) {
        CHECK(o.m >= 1);
        CHECK(o.m <= cfg.r() - 1);
        CHECK(o.h1 == h1_surface(o.m, cfg).dim);
    }
    CHECK(cm_verdict(cfg, cfg.r()).cohen_macaulay);
    CHECK(cm_verdict(cfg, cfg.r() + 1).cohen_macaulay);
    CHECK(cm_verdict(cfg, 9).cohen_macaulay);
}

TEST_CASE("three cones report for a witness configuration") {
    const SurfaceConfig cfg = witness_config();
    const ThreeCones cones = three_cones_report(cfg, 8);
    CHECK(cones.y.d == 1);
    CHECK(cones.z.d == 4);
    CHECK(cones.x.d == 5);
    CHECK_FALSE(cones.y.cm.cohen_macaulay);
    CHECK(cones.z.cm.cohen_macaulay);
    CHECK(cones.x.cm.cohen_macaulay);
    CHECK(cones.y.dualizing_order == 1);
    CHECK(cones.z.dualizing_order == 1);
    CHECK(cones.x.dualizing_order == 5);
    CHECK(cones.z.gorenstein_hint);
    CHECK_FALSE(cones.y.gorenstein_hint);
    CHECK_FALSE(cones.x.gorenstein_hint);
    // first canonical graded piece has dimension p_g
    CHECK(cones.z.hilbert[1] == 3);
}

TEST_CASE("a free q=0 configuration mod 5 gives a Cohen-Macaulay cone over L") {
    const Beauville5Report report = beauville5_report();
    REQUIRE(!report.q0_rows.empty());
    const SurfaceConfig cfg = config_from_row(report.q0_rows.front());
    CHECK(cm_verdict(cfg, 1).cohen_macaulay);
    const ThreeCones cones = three_cones_report(cfg, 4);
    CHECK(cones.y.cm.cohen_macaulay);
}

TEST_CASE("cones demand q = 0") {
    const Beauville5Report report = beauville5_report();
    REQUIRE(!report.q_positive_rows.empty());
    const SurfaceConfig cfg = config_from_row(report.q_positive_rows.front());
    REQUIRE(cfg.free());
    CHECK_THROWS_AS(cm_verdict(cfg, 1), PreconditionViolated);
}

TEST_CASE("cones demand a free action") {
    const Modulus n(7);
    const SurfaceConfig cfg(n, GroupHom::diagonal(Residue(1, n), Residue(1, n)));
    REQUIRE_FALSE(cfg.free());
    CHECK_THROWS_AS(hilbert_function(cfg, 1, 3), PreconditionViolated);
    CHECK_THROWS_AS(cm_verdict(cfg, 1), PreconditionViolated);
}
