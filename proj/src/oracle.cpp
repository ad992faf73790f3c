#include "geoconn/oracle.hpp"

#include <algorithm>

namespace geoconn {

std::vector<std::vector<std::uint32_t>> minimal_primes_squarefree(const Ideal& I) {
    const std::size_t n = I.ctx()->nvars();
    std::vector<std::vector<std::uint32_t>> supports;
    for (const auto& g : I.generators()) {
        if (g.term_count() != 1)
            throw value_error("oracle needs monomial generators");
        const Monomial& m = g.leading_monomial();
        std::vector<std::uint32_t> support;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.exponent(i) > 1)
                throw value_error("oracle needs square-free monomial generators");
            if (m.exponent(i) == 1) support.push_back((std::uint32_t)i);
        }
        if (support.empty()) throw value_error("constant generator has no minimal primes");
        supports.push_back(std::move(support));
    }

    // recursive transversals: a minimal prime picks one variable of every
    // generator support
    std::vector<std::vector<std::uint32_t>> primes{{}};
    for (const auto& support : supports) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& partial : primes) {
            bool covered = false;
            for (auto v : support)
                if (std::find(partial.begin(), partial.end(), v) != partial.end()) {
                    covered = true;
                    break;
                }
            if (covered) {
                next.push_back(partial);
                continue;
            }
            for (auto v : support) {
                auto extended = partial;
                extended.push_back(v);
                std::sort(extended.begin(), extended.end());
                next.push_back(std::move(extended));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        primes = std::move(next);
    }

    // keep inclusion-minimal sets
    std::sort(primes.begin(), primes.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    std::vector<std::vector<std::uint32_t>> minimal;
    for (const auto& cand : primes) {
        bool dominated = false;
        for (const auto& kept : minimal) {
            if (std::includes(cand.begin(), cand.end(), kept.begin(), kept.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(cand);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

std::size_t graph_component_count(const std::vector<std::vector<std::uint32_t>>& primes,
                                  std::size_t nvars) {
    const std::size_t k = primes.size();
    if (k == 0) return 0;
    std::vector<std::size_t> parent(k);
    for (std::size_t i = 0; i < k; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            std::vector<std::uint32_t> joined(primes[i]);
            joined.insert(joined.end(), primes[j].begin(), primes[j].end());
            std::sort(joined.begin(), joined.end());
            joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
            if (joined.size() < nvars) parent[find(i)] = find(j);
        }
    }
    std::size_t components = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (find(i) == i) ++components;
    return components;
}

} // namespace geoconn
