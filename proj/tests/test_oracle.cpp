#include <doctest.h>

#include "geoconn/oracle.hpp"
#include "test_util.hpp"

using namespace geoconn;
using namespace gtest_util;

using Primes = std::vector<std::vector<std::uint32_t>>;

TEST_CASE("minimal primes of square-free monomial ideals") {
    auto ctx = ring(3, {"x", "y", "u", "v"});
    auto primes = minimal_primes_squarefree(ideal(ctx, {"x*u", "x*v", "y*u", "y*v"}));
    CHECK(primes == Primes{{0, 1}, {2, 3}}); // (x, y) and (u, v)

    auto kxyz = ring(3, {"x", "y", "z"});
    CHECK(minimal_primes_squarefree(ideal(kxyz, {"x*y"})) == Primes{{0}, {1}});
    CHECK(minimal_primes_squarefree(ideal(kxyz, {"x"})) == Primes{{0}});

    CHECK_THROWS_AS(minimal_primes_squarefree(ideal(kxyz, {"x^2"})), value_error);
    CHECK_THROWS_AS(minimal_primes_squarefree(ideal(kxyz, {"x + y"})), value_error);
}

TEST_CASE("graph component counts") {
    // two disjoint lines in P^3: no edge
    CHECK(graph_component_count({{0, 1}, {2, 3}}, 4) == 2);
    // two planes in P^2 meeting along a line: edge
    CHECK(graph_component_count({{0}, {1}}, 3) == 1);
    CHECK(graph_component_count({{0, 1}}, 4) == 1);
    CHECK(graph_component_count({}, 3) == 0);
    // chain connectivity: a-b joined, b-c joined, a-c not
    CHECK(graph_component_count({{0, 1}, {1, 2}, {0, 2}}, 4) == 1);
}

TEST_CASE("oracle counts are field independent") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto ctx = ring(p, {"x", "y", "u", "v"});
        auto primes = minimal_primes_squarefree(ideal(ctx, {"x*u", "x*v", "y*u", "y*v"}));
        CHECK(graph_component_count(primes, 4) == 2);
    }
}

TEST_CASE("transversal primes cover every generator") {
    SplitMix64 rng(31415);
    for (int rep = 0; rep < 100; ++rep) {
        std::size_t n = 3 + rng.below(3);
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
        auto ctx = ring(3, vars);
        // random square-free monomial generators
        std::vector<Polynomial> gens;
        std::size_t k = 1 + rng.below(4);
        for (std::size_t g = 0; g < k; ++g) {
            std::vector<std::uint32_t> e(n, 0);
            std::size_t size = 1 + rng.below(n - 1);
            for (std::size_t s = 0; s < size; ++s) e[rng.below(n)] = 1;
            gens.push_back(Polynomial::monomial(ctx, Monomial(std::move(e)),
                                                ctx->field()->one()));
        }
        Ideal I(ctx, gens);
        auto primes = minimal_primes_squarefree(I);
        REQUIRE(!primes.empty());
        for (const auto& P : primes) {
            // every generator's support meets P
            for (const auto& g : I.generators()) {
                bool hit = false;
                for (auto v : P)
                    if (g.leading_monomial().exponent(v) == 1) hit = true;
                CHECK(hit);
            }
            // minimality: removing any variable uncovers some generator
            for (auto drop : P) {
                bool still_covers_all = true;
                for (const auto& g : I.generators()) {
                    bool hit = false;
                    for (auto v : P)
                        if (v != drop && g.leading_monomial().exponent(v) == 1) hit = true;
                    if (!hit) still_covers_all = false;
                }
                CHECK_FALSE(still_covers_all);
            }
        }
        // pairwise incomparable
        for (std::size_t i = 0; i < primes.size(); ++i)
            for (std::size_t j = 0; j < primes.size(); ++j)
                if (i != j)
                    CHECK_FALSE(std::includes(primes[i].begin(), primes[i].end(),
                                              primes[j].begin(), primes[j].end()));
    }
}
