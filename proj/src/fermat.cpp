#include "beauville/fermat.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace beauville {

namespace {

void require_degree_in_window(std::int64_t m, Modulus n) {
    if (m < 0 || m > n.value() - 3) {
        throw DegreeOutOfRange("degree " + std::to_string(m) + " outside [0, " +
                               std::to_string(n.value() - 3) + "] for n = " +
                               std::to_string(n.value()));
    }
}

EigenBasis build_eigenbasis(std::int64_t m, Modulus n) {
    EigenBasis basis;
    basis.degree = m;
    basis.entries.reserve(static_cast<std::size_t>((m + 1) * (m + 2) / 2));
    for (std::int64_t a = 0; a <= m; ++a) {
        for (std::int64_t b = 0; b <= m - a; ++b) {
            const Monomial mon{a, b, m - a - b};
            basis.entries.push_back({mon, monomial_character(mon, n)});
        }
    }
    return basis;
}

}  // namespace

const EigenBasis& h0_eigenbasis(std::int64_t m, Modulus n) {
    require_degree_in_window(m, n);
    static std::mutex cache_mutex;
    static std::map<std::pair<std::int64_t, std::int64_t>, std::unique_ptr<EigenBasis>> cache;

    const std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = cache[{n.value(), m}];
    if (!slot) {
        slot = std::make_unique<EigenBasis>(build_eigenbasis(m, n));
    }
    return *slot;
}

std::vector<CharacterV> h1_characters(std::int64_t m, Modulus n) {
    require_degree_in_window(m, n);
    const EigenBasis& dual = h0_eigenbasis(n.value() - 3 - m, n);
    std::vector<CharacterV> chars;
    chars.reserve(dual.entries.size());
    for (const EigenEntry& entry : dual.entries) {
        chars.push_back(-entry.chi);
    }
    return chars;
}

std::int64_t genus(Modulus n) {
    return (n.value() - 1) * (n.value() - 2) / 2;
}

}  // namespace beauville
