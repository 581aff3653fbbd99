#include "beauville/surface.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace beauville {

namespace {

void require_same_modulus(Modulus a, Modulus b, const char* what) {
    if (a != b) {
        throw ModulusMismatch(std::string(what) + ": moduli " +
                              std::to_string(a.value()) + " and " +
                              std::to_string(b.value()) + " mixed");
    }
}

// Columns are v1, v2 in standard coordinates: 3^{-1} [[2, -1], [-1, 2]].
Mat2 v_to_std_matrix(Modulus n) {
    const Residue third = inv3(n);
    const Residue two(2, n);
    const Residue minus_one(-1, n);
    return {third * two, third * minus_one, third * minus_one, third * two};
}

// Inverse of the above: [[2, 1], [1, 2]].
Mat2 std_to_v_matrix(Modulus n) {
    const Residue two(2, n);
    const Residue one(1, n);
    return {two, one, one, two};
}

void require_surface_modulus(Modulus n) {
    if (!n.coprime_to(6)) {
        throw PreconditionViolated("surface construction needs gcd(n, 6) = 1; n = " +
                                   std::to_string(n.value()));
    }
}

std::unordered_map<std::int64_t, std::size_t> character_index(const EigenBasis& basis) {
    std::unordered_map<std::int64_t, std::size_t> index;
    index.reserve(basis.entries.size() * 2);
    for (std::size_t i = 0; i < basis.entries.size(); ++i) {
        index.emplace(basis.entries[i].chi.key(), i);
    }
    return index;
}

}  // namespace

Mat2 mat2_mul(const Mat2& lhs, const Mat2& rhs) {
    require_same_modulus(lhs.modulus(), rhs.modulus(), "matrix product");
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

Mat2 mat2_transpose(const Mat2& m) {
    return {m.a, m.c, m.b, m.d};
}

GroupHom GroupHom::diagonal(Residue lambda, Residue mu) {
    if (!lambda.is_unit()) {
        throw NotAUnit("diagonal hom needs unit lambda, got " +
                       std::to_string(lambda.value()));
    }
    if (!mu.is_unit()) {
        throw NotAUnit("diagonal hom needs unit mu, got " + std::to_string(mu.value()));
    }
    const Modulus n = lambda.modulus();
    require_same_modulus(n, mu.modulus(), "diagonal hom");
    const Residue zero(0, n);
    return from_phi_v({lambda, zero, zero, mu});
}

GroupHom GroupHom::from_phi_v(const Mat2& phi_v) {
    const Modulus n = phi_v.modulus();
    const Mat2 phi_std = mat2_mul(mat2_mul(v_to_std_matrix(n), phi_v), std_to_v_matrix(n));
    return GroupHom(phi_v, mat2_transpose(phi_std));
}

GroupHom GroupHom::from_psi_std(const Mat2& psi_std) {
    const Modulus n = psi_std.modulus();
    const Mat2 phi_std = mat2_transpose(psi_std);
    const Mat2 phi_v = mat2_mul(mat2_mul(std_to_v_matrix(n), phi_std), v_to_std_matrix(n));
    return GroupHom(phi_v, psi_std);
}

CharacterV GroupHom::apply_phi(const CharacterV& chi) const {
    require_same_modulus(modulus(), chi.modulus(), "apply_phi");
    return {phi_v_.a * chi.s + phi_v_.b * chi.t, phi_v_.c * chi.s + phi_v_.d * chi.t};
}

std::pair<Residue, Residue> GroupHom::apply_psi(Residue u, Residue v) const {
    require_same_modulus(modulus(), u.modulus(), "apply_psi");
    require_same_modulus(modulus(), v.modulus(), "apply_psi");
    return {psi_std_.a * u + psi_std_.b * v, psi_std_.c * u + psi_std_.d * v};
}

bool GroupHom::is_diagonal_v() const noexcept {
    return phi_v_.b.is_zero() && phi_v_.c.is_zero();
}

bool GroupHom::is_invertible() const noexcept {
    return (phi_v_.a * phi_v_.d - phi_v_.b * phi_v_.c).is_unit();
}

GroupHom diagonal_hom(Residue lambda, Residue mu) {
    return GroupHom::diagonal(lambda, mu);
}

Mat2 psi_standard_matrix(const GroupHom& hom) {
    return hom.psi_std();
}

std::vector<std::pair<std::int64_t, std::int64_t>> sigma_set(Modulus n) {
    std::vector<std::pair<std::int64_t, std::int64_t>> sigma;
    sigma.reserve(static_cast<std::size_t>(3 * n.value() - 2));
    sigma.emplace_back(0, 0);
    for (std::int64_t k = 1; k < n.value(); ++k) {
        sigma.emplace_back(k, 0);
        sigma.emplace_back(0, k);
        sigma.emplace_back(k, k);
    }
    std::sort(sigma.begin(), sigma.end());
    return sigma;
}

bool is_free_action(const GroupHom& hom, Modulus n) {
    require_same_modulus(hom.modulus(), n, "is_free_action");
    const auto sigma = sigma_set(n);
    for (const auto& g : sigma) {
        if (g.first == 0 && g.second == 0) {
            continue;
        }
        const auto image = hom.apply_psi(Residue(g.first, n), Residue(g.second, n));
        const std::pair<std::int64_t, std::int64_t> p{image.first.value(),
                                                      image.second.value()};
        if (std::binary_search(sigma.begin(), sigma.end(), p)) {
            return false;
        }
    }
    return true;
}

std::array<UnitCondition, 7> seven_unit_conditions_detail(Residue lambda, Residue mu) {
    const Modulus n = lambda.modulus();
    require_same_modulus(n, mu.modulus(), "seven_unit_conditions");
    const Residue two(2, n);
    const Residue four(4, n);
    const Residue values[7] = {
        lambda,
        mu,
        lambda - four * mu,
        lambda - mu,
        mu - four * lambda,
        lambda + two * mu,
        two * lambda + mu,
    };
    static constexpr const char* kExprs[7] = {
        "lambda", "mu", "lambda-4mu", "lambda-mu", "mu-4lambda", "lambda+2mu", "2lambda+mu",
    };
    std::array<UnitCondition, 7> out{};
    for (int i = 0; i < 7; ++i) {
        out[i] = {kExprs[i], values[i].value(), values[i].is_unit()};
    }
    return out;
}

bool seven_unit_conditions(Residue lambda, Residue mu) {
    const auto detail = seven_unit_conditions_detail(lambda, mu);
    return std::all_of(detail.begin(), detail.end(),
                       [](const UnitCondition& c) { return c.unit; });
}

SurfaceConfig::SurfaceConfig(Modulus n, GroupHom hom)
    : n_(n), hom_(hom), free_(false) {
    require_surface_modulus(n);
    require_same_modulus(n, hom.modulus(), "SurfaceConfig");
    free_ = is_free_action(hom_, n_);
}

H1Count h1_surface(std::int64_t m, const SurfaceConfig& cfg) {
    const Modulus n = cfg.n();
    const std::int64_t mprime = cfg.r() - m;
    const EigenBasis& basis_m = h0_eigenbasis(m, n);
    const EigenBasis& basis_mp = h0_eigenbasis(mprime, n);

    H1Count result;

    // H^0(m) tensor H^1(m): probe chi = phi(chi') against the degree-m
    // characters, keyed by character.
    const auto index_m = character_index(basis_m);
    for (const EigenEntry& entry : basis_mp.entries) {
        const CharacterV image = cfg.hom().apply_phi(entry.chi);
        const auto it = index_m.find(image.key());
        if (it != index_m.end()) {
            result.witnesses.push_back({basis_m.entries[it->second].mon, entry.mon,
                                        Direction::ChiEqPhiChiPrime});
        }
    }

    // H^1(m) tensor H^0(m): chi' = phi(chi).
    const auto index_mp = character_index(basis_mp);
    for (const EigenEntry& entry : basis_m.entries) {
        const CharacterV image = cfg.hom().apply_phi(entry.chi);
        const auto it = index_mp.find(image.key());
        if (it != index_mp.end()) {
            result.witnesses.push_back({entry.mon, basis_mp.entries[it->second].mon,
                                        Direction::ChiPrimeEqPhiChi});
        }
    }

    result.dim = static_cast<std::int64_t>(result.witnesses.size());
    return result;
}

std::int64_t h0_surface(std::int64_t m, const SurfaceConfig& cfg) {
    const EigenBasis& basis = h0_eigenbasis(m, cfg.n());
    const auto index = character_index(basis);
    std::int64_t count = 0;
    for (const EigenEntry& entry : basis.entries) {
        const CharacterV needed = -cfg.hom().apply_phi(entry.chi);
        if (index.count(needed.key()) != 0) {
            ++count;
        }
    }
    return count;
}

CohomRow cohomology_row(std::int64_t m, const SurfaceConfig& cfg) {
    if (m < 0) {
        throw PreconditionViolated("cohomology_row needs m >= 0, got " + std::to_string(m));
    }
    const std::int64_t r = cfg.r();
    const std::int64_t chi = surface_numerics(cfg.n()).chiO + m * (m - r);
    if (m > r) {
        return {m, chi, 0, 0, chi};
    }
    CohomRow row;
    row.m = m;
    row.h0 = h0_surface(m, cfg);
    row.h1 = h1_surface(m, cfg).dim;
    row.h2 = h0_surface(r - m, cfg);
    row.chi = chi;
    return row;
}

SurfaceNumerics surface_numerics(Modulus n) {
    require_surface_modulus(n);
    const std::int64_t r = n.value() - 3;
    const std::int64_t g = genus(n);
    const std::int64_t numerator = (1 - g) * (1 - g);
    const std::int64_t nsq = n.value() * n.value();
    if (numerator % nsq != 0) {
        throw NonIntegralChi("(1 - g)^2 = " + std::to_string(numerator) +
                             " not divisible by n^2 = " + std::to_string(nsq));
    }
    return {2, 2 * r * r, numerator / nsq, r};
}

}  // namespace beauville
