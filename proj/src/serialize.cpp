#include "beauville/serialize.hpp"

#include <utility>

namespace beauville {

namespace {

Json nested_matrix(const std::array<std::int64_t, 4>& m) {
    return Json::array({Json::array({m[0], m[1]}), Json::array({m[2], m[3]})});
}

std::array<std::int64_t, 4> matrix_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2) {
        throw PreconditionViolated("psi_std must be a 2x2 nested array");
    }
    return {j[0][0].get<std::int64_t>(), j[0][1].get<std::int64_t>(),
            j[1][0].get<std::int64_t>(), j[1][1].get<std::int64_t>()};
}

Json monomial_to_json(const Monomial& mon) {
    return Json::array({mon.a, mon.b, mon.c});
}

Monomial monomial_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) {
        throw PreconditionViolated("witness monomial must be an [a, b, c] array");
    }
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(),
            j[2].get<std::int64_t>()};
}

}  // namespace

const char* direction_name(Direction direction) {
    return direction == Direction::ChiEqPhiChiPrime ? "chi_eq_phi_chiprime"
                                                    : "chiprime_eq_phi_chi";
}

Direction direction_from_name(const std::string& name) {
    if (name == "chi_eq_phi_chiprime") {
        return Direction::ChiEqPhiChiPrime;
    }
    if (name == "chiprime_eq_phi_chi") {
        return Direction::ChiPrimeEqPhiChi;
    }
    throw PreconditionViolated("unknown direction: " + name);
}

const char* strategy_name(Strategy strategy) {
    return strategy == Strategy::Direct ? "direct" : "exhaustive";
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "direct") {
        return Strategy::Direct;
    }
    if (name == "exhaustive") {
        return Strategy::Exhaustive;
    }
    throw PreconditionViolated("unknown strategy: " + name);
}

Json to_json(const Certificate& cert) {
    Json j;
    j["n"] = cert.n;
    j["m"] = cert.m;
    j["lambda"] = cert.lambda;
    j["mu"] = cert.mu;
    j["psi_std"] = nested_matrix(cert.psi_std);
    Json witness;
    witness["deg_m"] = monomial_to_json(cert.deg_m);
    witness["deg_mprime"] = monomial_to_json(cert.deg_mprime);
    witness["direction"] = direction_name(cert.direction);
    j["witness"] = std::move(witness);
    j["h1_claimed"] = cert.h1_claimed;
    Json conditions = Json::array();
    for (const ConditionRecord& c : cert.seven_conditions) {
        Json entry;
        entry["expr"] = c.expr;
        entry["value"] = c.value;
        entry["is_unit"] = c.is_unit;
        conditions.push_back(std::move(entry));
    }
    j["seven_conditions"] = std::move(conditions);
    j["strategy"] = strategy_name(cert.strategy);
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate cert;
    cert.n = j.at("n").get<std::int64_t>();
    cert.m = j.at("m").get<std::int64_t>();
    cert.lambda = j.at("lambda").get<std::int64_t>();
    cert.mu = j.at("mu").get<std::int64_t>();
    cert.psi_std = matrix_from_json(j.at("psi_std"));
    const Json& witness = j.at("witness");
    cert.deg_m = monomial_from_json(witness.at("deg_m"));
    cert.deg_mprime = monomial_from_json(witness.at("deg_mprime"));
    cert.direction = direction_from_name(witness.at("direction").get<std::string>());
    cert.h1_claimed = j.at("h1_claimed").get<std::int64_t>();
    for (const Json& c : j.at("seven_conditions")) {
        cert.seven_conditions.push_back({c.at("expr").get<std::string>(),
                                         c.at("value").get<std::int64_t>(),
                                         c.at("is_unit").get<bool>()});
    }
    cert.strategy = strategy_from_name(j.at("strategy").get<std::string>());
    return cert;
}

Json to_json(const VerifyResult& result) {
    Json j;
    j["ok"] = result.ok;
    j["reasons"] = result.reasons;
    return j;
}

Json to_json(const SearchReport& report) {
    Json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["strategy"] = strategy_name(report.strategy);
    Json found = Json::array();
    for (const SearchHit& hit : report.found) {
        Json entry;
        entry["lambda"] = hit.lambda;
        entry["mu"] = hit.mu;
        entry["h1"] = hit.h1;
        found.push_back(std::move(entry));
    }
    j["found"] = std::move(found);
    return j;
}

Json to_json(const CohomRow& row) {
    Json j;
    j["m"] = row.m;
    j["h0"] = row.h0;
    j["h1"] = row.h1;
    j["h2"] = row.h2;
    j["chi"] = row.chi;
    return j;
}

Json to_json(const std::vector<CohomRow>& rows) {
    Json arr = Json::array();
    for (const CohomRow& row : rows) {
        arr.push_back(to_json(row));
    }
    return arr;
}

Json to_json(const SurfaceNumerics& numerics) {
    Json j;
    j["L_squared"] = numerics.Lsq;
    j["K_squared"] = numerics.Ksq;
    j["chi_O"] = numerics.chiO;
    j["r"] = numerics.r;
    return j;
}

Json to_json(const ConeReport& report) {
    Json j;
    j["d"] = report.d;
    j["hilbert"] = report.hilbert;
    Json offenders = Json::array();
    for (const ConeOffender& o : report.cm.offenders) {
        Json entry;
        entry["m"] = o.m;
        entry["h1"] = o.h1;
        offenders.push_back(std::move(entry));
    }
    Json cm;
    cm["cohen_macaulay"] = report.cm.cohen_macaulay;
    cm["offenders"] = std::move(offenders);
    j["cm"] = std::move(cm);
    j["dualizing_order"] = report.dualizing_order;
    j["gorenstein_hint"] = report.gorenstein_hint;
    return j;
}

Json to_json(const ThreeCones& cones) {
    Json j;
    j["y"] = to_json(cones.y);
    j["z"] = to_json(cones.z);
    j["x"] = to_json(cones.x);
    return j;
}

Json to_json(const Beauville5Row& row) {
    Json j;
    j["psi_std"] = nested_matrix(row.psi_std);
    j["q"] = row.q;
    j["h0_l"] = row.h0_l;
    j["h1_l"] = row.h1_l;
    j["h2_l"] = row.h2_l;
    return j;
}

Json to_json(const Beauville5Report& report) {
    Json j;
    j["total_matrices"] = report.total_matrices;
    j["free_count"] = report.free_count;
    j["diagonal_free_count"] = report.diagonal_free_count;
    j["numerics"] = to_json(report.numerics);
    Json q0 = Json::array();
    for (const Beauville5Row& row : report.q0_rows) {
        q0.push_back(to_json(row));
    }
    j["q0_rows"] = std::move(q0);
    Json qp = Json::array();
    for (const Beauville5Row& row : report.q_positive_rows) {
        qp.push_back(to_json(row));
    }
    j["q_positive_rows"] = std::move(qp);
    j["vanishing_verified"] = report.vanishing_verified;
    return j;
}

}  // namespace beauville
