#include "beauville/search.hpp"

#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "beauville/characters.hpp"
#include "beauville/parallel.hpp"

namespace beauville {

namespace {

struct WitnessShape {
    Monomial mon;
    std::int64_t u = 0;  // a - c
};

// The unique degree-m monomial with b = c and a - c in {1, 2, 3}.
WitnessShape witness_monomial(std::int64_t m) {
    const std::int64_t u = (m - 1) % 3 + 1;
    const std::int64_t c = (m - u) / 3;
    return {{m - 2 * c, c, c}, u};
}

std::vector<ConditionRecord> record_conditions(Residue lambda, Residue mu) {
    std::vector<ConditionRecord> out;
    out.reserve(7);
    for (const UnitCondition& c : seven_unit_conditions_detail(lambda, mu)) {
        out.push_back({c.expr, c.value, c.unit});
    }
    return out;
}

void require_window(Modulus n, std::int64_t m, const char* what) {
    if (m < 1 || m > n.value() - 4) {
        throw PreconditionViolated(std::string(what) + " needs 1 <= m <= n-4, got m = " +
                                   std::to_string(m) + " for n = " +
                                   std::to_string(n.value()));
    }
}

Certificate make_certificate(const SurfaceConfig& cfg, Residue lambda, Residue mu,
                             std::int64_t m, const Monomial& deg_m,
                             const Monomial& deg_mprime, Direction direction,
                             std::int64_t h1_claimed, Strategy strategy) {
    Certificate cert;
    cert.n = cfg.n().value();
    cert.m = m;
    cert.lambda = lambda.value();
    cert.mu = mu.value();
    cert.psi_std = cfg.hom().psi_std().values();
    cert.deg_m = deg_m;
    cert.deg_mprime = deg_mprime;
    cert.direction = direction;
    cert.h1_claimed = h1_claimed;
    cert.seven_conditions = record_conditions(lambda, mu);
    cert.strategy = strategy;
    return cert;
}

}  // namespace

Certificate find_witness(Modulus n, std::int64_t m) {
    if (n.value() < 7 || std::gcd(n.value(), std::int64_t{30}) != 1) {
        throw PreconditionViolated("find_witness needs n >= 7 with gcd(n, 30) = 1, got n = " +
                                   std::to_string(n.value()));
    }
    require_window(n, m, "find_witness");

    const std::int64_t mprime = n.value() - 3 - m;
    const WitnessShape shape_m = witness_monomial(m);
    const WitnessShape shape_mp = witness_monomial(mprime);
    // chi = (u, 0) and chi' = (u', 0) in the v-basis, so chi = phi(chi')
    // pins lambda = u / u'.
    const Residue lambda = Residue(shape_m.u, n) * Residue(shape_mp.u, n).inverse();

    for (std::int64_t v = 1; v < n.value(); ++v) {
        const Residue mu(v, n);
        if (!mu.is_unit() || !seven_unit_conditions(lambda, mu)) {
            continue;
        }
        const SurfaceConfig cfg(n, GroupHom::diagonal(lambda, mu));
        const std::int64_t h1 = h1_surface(m, cfg).dim;
        return make_certificate(cfg, lambda, mu, m, shape_m.mon, shape_mp.mon,
                                Direction::ChiEqPhiChiPrime, h1, Strategy::Direct);
    }

    // Unreachable under the precondition; sweep everything before giving up.
    const SearchReport sweep = exhaustive_search(n, m);
    for (const SearchHit& hit : sweep.found) {
        if (hit.h1 < 1) {
            continue;
        }
        const Residue lam(hit.lambda, n);
        const Residue mu(hit.mu, n);
        const SurfaceConfig cfg(n, GroupHom::diagonal(lam, mu));
        const H1Count count = h1_surface(m, cfg);
        const H1Witness& witness = count.witnesses.front();
        return make_certificate(cfg, lam, mu, m, witness.deg_m, witness.deg_mprime,
                                witness.direction, count.dim, Strategy::Exhaustive);
    }
    throw NoMuFound("no unit pair passes the freeness conditions with h1 >= 1 for n = " +
                    std::to_string(n.value()) + ", m = " + std::to_string(m));
}

SearchReport exhaustive_search(Modulus n, std::int64_t m, int jobs) {
    if (!n.coprime_to(6)) {
        throw PreconditionViolated("exhaustive_search needs gcd(n, 6) = 1, got n = " +
                                   std::to_string(n.value()));
    }
    require_window(n, m, "exhaustive_search");

    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t lam = 1; lam < n.value(); ++lam) {
        if (!n.coprime_to(lam)) {
            continue;
        }
        for (std::int64_t mu = 1; mu < n.value(); ++mu) {
            if (n.coprime_to(mu)) {
                pairs.emplace_back(lam, mu);
            }
        }
    }

    std::vector<std::optional<SearchHit>> slots(pairs.size());
    parallel_chunks(static_cast<std::int64_t>(pairs.size()), jobs,
                    [&](std::int64_t lo, std::int64_t hi) {
                        for (std::int64_t i = lo; i < hi; ++i) {
                            const auto& [lam_v, mu_v] = pairs[static_cast<std::size_t>(i)];
                            const Residue lam(lam_v, n);
                            const Residue mu(mu_v, n);
                            if (!seven_unit_conditions(lam, mu)) {
                                continue;
                            }
                            const SurfaceConfig cfg(n, GroupHom::diagonal(lam, mu));
                            slots[static_cast<std::size_t>(i)] =
                                SearchHit{lam_v, mu_v, h1_surface(m, cfg).dim};
                        }
                    });

    SearchReport report;
    report.n = n.value();
    report.m = m;
    report.strategy = Strategy::Exhaustive;
    for (const auto& slot : slots) {
        if (slot) {
            report.found.push_back(*slot);
        }
    }
    return report;
}

namespace {

void check_certificate(const Certificate& cert, std::vector<std::string>& reasons) {
    const Modulus n(cert.n);
    if (!n.coprime_to(6)) {
        reasons.push_back("n = " + std::to_string(cert.n) + " is not coprime to 6");
        return;
    }
    const std::int64_t r = cert.n - 3;
    if (cert.m < 1 || cert.m > r - 1) {
        reasons.push_back("m = " + std::to_string(cert.m) + " is outside [1, n-4]");
        return;
    }
    if (cert.h1_claimed < 1) {
        reasons.push_back("h1_claimed must be >= 1, got " +
                          std::to_string(cert.h1_claimed));
    }
    const Residue lambda(cert.lambda, n);
    const Residue mu(cert.mu, n);
    if (!lambda.is_unit()) {
        reasons.push_back("lambda = " + std::to_string(cert.lambda) + " is not a unit");
        return;
    }
    if (!mu.is_unit()) {
        reasons.push_back("mu = " + std::to_string(cert.mu) + " is not a unit");
        return;
    }

    const GroupHom hom = GroupHom::diagonal(lambda, mu);
    if (hom.psi_std().values() != cert.psi_std) {
        reasons.push_back("psi_std does not match the matrix derived from (lambda, mu)");
    }

    const auto detail = seven_unit_conditions_detail(lambda, mu);
    if (cert.seven_conditions.size() != detail.size()) {
        reasons.push_back("expected 7 recorded unit conditions, got " +
                          std::to_string(cert.seven_conditions.size()));
    } else {
        for (std::size_t i = 0; i < detail.size(); ++i) {
            const ConditionRecord recomputed{detail[i].expr, detail[i].value,
                                             detail[i].unit};
            if (!(cert.seven_conditions[i] == recomputed)) {
                reasons.push_back("recorded condition '" + cert.seven_conditions[i].expr +
                                  "' disagrees with recomputation");
            }
        }
    }
    for (const UnitCondition& c : detail) {
        if (!c.unit) {
            reasons.push_back(std::string("freeness condition fails: ") + c.expr + " = " +
                              std::to_string(c.value) + " is not a unit");
        }
    }

    const SurfaceConfig cfg(n, hom);
    if (!cfg.free()) {
        reasons.push_back("action is not free under the set-based check");
    }

    const std::int64_t mprime = r - cert.m;
    bool witness_ok = true;
    if (cert.deg_m.a < 0 || cert.deg_m.b < 0 || cert.deg_m.c < 0 ||
        cert.deg_m.degree() != cert.m) {
        reasons.push_back("witness monomial for degree m is malformed");
        witness_ok = false;
    }
    if (cert.deg_mprime.a < 0 || cert.deg_mprime.b < 0 || cert.deg_mprime.c < 0 ||
        cert.deg_mprime.degree() != mprime) {
        reasons.push_back("witness monomial for degree m' is malformed");
        witness_ok = false;
    }
    if (witness_ok) {
        const CharacterV chi = monomial_character(cert.deg_m, n);
        const CharacterV chip = monomial_character(cert.deg_mprime, n);
        const bool holds = cert.direction == Direction::ChiEqPhiChiPrime
                               ? chi == hom.apply_phi(chip)
                               : chip == hom.apply_phi(chi);
        if (!holds) {
            reasons.push_back("witness characters do not satisfy the claimed equation");
        }
    }

    const std::int64_t h1 = h1_surface(cert.m, cfg).dim;
    if (h1 < cert.h1_claimed) {
        reasons.push_back("recomputed h1 = " + std::to_string(h1) +
                          " is below the claimed " + std::to_string(cert.h1_claimed));
    }
}

}  // namespace

VerifyResult verify_certificate(const Certificate& cert) {
    VerifyResult result;
    try {
        check_certificate(cert, result.reasons);
    } catch (const std::exception& e) {
        result.reasons.push_back(e.what());
    }
    result.ok = result.reasons.empty();
    return result;
}

Beauville5Report beauville5_report(int jobs) {
    const Modulus n(5);

    struct Slot {
        bool free = false;
        bool diagonal_unit = false;
        Beauville5Row row;
    };
    std::vector<Slot> slots(625);

    parallel_chunks(static_cast<std::int64_t>(slots.size()), jobs,
                    [&](std::int64_t lo, std::int64_t hi) {
                        for (std::int64_t idx = lo; idx < hi; ++idx) {
                            const Mat2 psi{Residue(idx / 125, n), Residue(idx / 25 % 5, n),
                                           Residue(idx / 5 % 5, n), Residue(idx % 5, n)};
                            const GroupHom hom = GroupHom::from_psi_std(psi);
                            if (!is_free_action(hom, n)) {
                                continue;
                            }
                            Slot& slot = slots[static_cast<std::size_t>(idx)];
                            slot.free = true;
                            slot.diagonal_unit = hom.is_diagonal_v() &&
                                                 hom.phi_v().a.is_unit() &&
                                                 hom.phi_v().d.is_unit();
                            const SurfaceConfig cfg(n, hom);
                            slot.row.psi_std = psi.values();
                            slot.row.q = h1_surface(0, cfg).dim;
                            const CohomRow at_l = cohomology_row(1, cfg);
                            slot.row.h0_l = at_l.h0;
                            slot.row.h1_l = at_l.h1;
                            slot.row.h2_l = at_l.h2;
                        }
                    });

    Beauville5Report report;
    report.total_matrices = static_cast<std::int64_t>(slots.size());
    report.numerics = surface_numerics(n);
    bool q0_rows_vanish = true;
    for (const Slot& slot : slots) {
        if (!slot.free) {
            continue;
        }
        ++report.free_count;
        if (slot.diagonal_unit) {
            ++report.diagonal_free_count;
        }
        if (slot.row.q == 0) {
            report.q0_rows.push_back(slot.row);
            q0_rows_vanish = q0_rows_vanish && slot.row.h0_l == 0 && slot.row.h1_l == 0;
        } else {
            report.q_positive_rows.push_back(slot.row);
        }
    }
    report.vanishing_verified = report.free_count >= 1 &&
                                report.diagonal_free_count == 0 && q0_rows_vanish;
    return report;
}

}  // namespace beauville
