#include "beauville/cones.hpp"

#include <numeric>
#include <string>

namespace beauville {

namespace {

void require_free(const SurfaceConfig& cfg, const char* what) {
    if (!cfg.free()) {
        throw PreconditionViolated(std::string(what) + " needs a free action");
    }
}

void require_positive_degree(std::int64_t d, const char* what) {
    if (d < 1) {
        throw PreconditionViolated(std::string(what) + " needs d >= 1, got " +
                                   std::to_string(d));
    }
}

}  // namespace

std::vector<std::int64_t> hilbert_function(const SurfaceConfig& cfg, std::int64_t d,
                                           std::int64_t max_index) {
    require_free(cfg, "hilbert_function");
    require_positive_degree(d, "hilbert_function");
    if (max_index < 0) {
        throw PreconditionViolated("hilbert_function needs max_index >= 0, got " +
                                   std::to_string(max_index));
    }
    std::vector<std::int64_t> entries;
    entries.reserve(static_cast<std::size_t>(max_index) + 1);
    for (std::int64_t i = 0; i <= max_index; ++i) {
        entries.push_back(cohomology_row(i * d, cfg).h0);
    }
    return entries;
}

CmVerdict cm_verdict(const SurfaceConfig& cfg, std::int64_t d) {
    require_free(cfg, "cm_verdict");
    require_positive_degree(d, "cm_verdict");
    const std::int64_t q = h1_surface(0, cfg).dim;
    if (q != 0) {
        throw PreconditionViolated("cm_verdict needs q = 0, got q = " + std::to_string(q));
    }
    CmVerdict verdict;
    for (std::int64_t m = d; m <= cfg.r() - 1; m += d) {
        const std::int64_t h1 = h1_surface(m, cfg).dim;
        if (h1 != 0) {
            verdict.offenders.push_back({m, h1});
        }
    }
    verdict.cohen_macaulay = verdict.offenders.empty();
    return verdict;
}

std::int64_t dualizing_order(std::int64_t r, std::int64_t t) {
    if (r < 1 || t < 1) {
        throw PreconditionViolated("dualizing_order needs r, t >= 1, got r = " +
                                   std::to_string(r) + ", t = " + std::to_string(t));
    }
    return t / std::gcd(r, t);
}

ConeReport cone_report(const SurfaceConfig& cfg, std::int64_t d, std::int64_t max_index) {
    ConeReport report;
    report.d = d;
    report.hilbert = hilbert_function(cfg, d, max_index);
    report.cm = cm_verdict(cfg, d);
    report.dualizing_order = dualizing_order(cfg.r(), d);
    report.gorenstein_hint = d == cfg.r() && report.cm.cohen_macaulay;
    return report;
}

ThreeCones three_cones_report(const SurfaceConfig& cfg, std::int64_t max_index) {
    return {cone_report(cfg, 1, max_index), cone_report(cfg, cfg.r(), max_index),
            cone_report(cfg, cfg.r() + 1, max_index)};
}

}  // namespace beauville
