// Acceptance suite: runs every gate criterion end to end, prints one
// PASS/FAIL line each, exits nonzero when any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "corpus.hpp"
#include "geoconn/frobenius.hpp"
#include "geoconn/pipeline.hpp"
#include "geoconn/resolution.hpp"
#include "test_util.hpp"

using namespace geoconn;
using gtest_util::ideal;
using gtest_util::pp;
using gtest_util::random_homogeneous;
using gtest_util::random_poly;
using gtest_util::ring;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(std::ostringstream&)> run; // throws or streams failures
};

ProblemSpec spec_of(std::uint32_t p, std::vector<std::string> vars,
                    std::vector<std::string> gens, std::uint32_t ext = 1,
                    std::vector<std::uint32_t> weights = {}) {
    ProblemSpec s;
    s.characteristic = p;
    s.extension = ext;
    s.variables = std::move(vars);
    s.weights = std::move(weights);
    s.generators = std::move(gens);
    return s;
}

const std::vector<std::string> kQuadricPair{"u^2 - 2*x^2", "v^2 - 2*y^2", "u*v - 2*x*y",
                                            "v*x - u*y"};
const std::vector<std::string> kDisjointLines{"x*u", "x*v", "y*u", "y*v"};

#define REQUIRE_EQ(lhs, rhs)                                                        \
    do {                                                                            \
        auto lv = (lhs);                                                            \
        auto rv = (rhs);                                                            \
        if (!(lv == rv))                                                            \
            out << "  mismatch at " << __LINE__ << ": " << #lhs << " = " << lv      \
                << ", expected " << rv << "\n";                                     \
    } while (0)

#define REQUIRE_TRUE(cond)                                                          \
    do {                                                                            \
        if (!(cond)) out << "  failed at " << __LINE__ << ": " << #cond << "\n";    \
    } while (0)

void golden_fixture(std::ostringstream& out) {
    auto r3 = run_pipeline(spec_of(3, {"x", "y", "u", "v"}, kQuadricPair));
    REQUIRE_EQ(r3.components, 2);
    REQUIRE_EQ(*r3.ell, (std::size_t)1);
    REQUIRE_TRUE(!r3.connected_geom);
    REQUIRE_TRUE(r3.frobenius_matrix.has_value());
    REQUIRE_EQ(r3.frobenius_matrix->rows(), (std::size_t)1);
    REQUIRE_EQ(r3.frobenius_matrix->at(0, 0).raw, 2u);

    auto r5 = run_pipeline(spec_of(5, {"x", "y", "u", "v"}, kQuadricPair));
    REQUIRE_EQ(r5.components, 2);
    REQUIRE_EQ(*r5.ell, (std::size_t)1);
    REQUIRE_TRUE(!r5.connected_geom);
    REQUIRE_TRUE(r5.frobenius_matrix.has_value());
    REQUIRE_TRUE(!r5.frobenius_matrix->field()->is_zero(r5.frobenius_matrix->at(0, 0)));
}

void disjoint_lines(std::ostringstream& out) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto spec = spec_of(p, {"x", "y", "u", "v"}, kDisjointLines);
        auto pipeline = run_pipeline(spec);
        auto oracle = run_oracle(spec);
        REQUIRE_EQ(pipeline.components, 2);
        REQUIRE_EQ(oracle.components, pipeline.components);
    }
}

void connected_fixtures(std::ostringstream& out) {
    for (std::size_t n = 2; n <= 4; ++n) {
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i));
        auto r = run_pipeline(spec_of(3, vars, {}));
        REQUIRE_EQ(r.components, 1);
        REQUIRE_TRUE(r.connected_geom);
    }
    REQUIRE_EQ(run_pipeline(spec_of(3, {"x", "y", "z"}, {"x^2 + y*z"})).components, 1);
    REQUIRE_EQ(run_pipeline(spec_of(3, {"x", "y", "z"}, {"x*y"})).components, 1);
}

void dimension_one(std::ostringstream& out) {
    REQUIRE_EQ(run_pipeline(spec_of(3, {"x", "y"}, {"x^2 + y^2"})).components, 2);
    REQUIRE_EQ(run_pipeline(spec_of(5, {"x", "y"}, {"x^2 + y^2"})).components, 2);
}

void oracle_corpus(std::ostringstream& out) {
    SplitMix64 rng(0xC0FFEE);
    const std::size_t total = 102;
    std::size_t mismatches = 0, checked = 0;
    for (std::size_t k = 0; k < total; ++k) {
        auto fx = corpus::random_fixture(rng);
        for (std::uint32_t p : {2u, 3u, 5u}) {
            auto spec = spec_of(p, corpus::var_names(fx.nvars), fx.generator_texts);
            auto a = run_pipeline(spec);
            auto b = run_oracle(spec);
            PipelineOptions heur;
            heur.strategy = Strategy::Heuristic;
            auto c = run_pipeline(spec, heur);
            ++checked;
            if (a.components != b.components || a.components != c.components) {
                ++mismatches;
                out << "  corpus mismatch (p = " << p << "):";
                for (const auto& g : fx.generator_texts) out << " " << g;
                out << " pipeline " << a.components << " oracle " << b.components
                    << " heuristic " << c.components << "\n";
            }
            // square-free monomial quotients are reduced, so the Frobenius
            // is injective on the strand
            if (a.frobenius_matrix && a.frobenius_matrix->rows() > 0 &&
                a.frobenius_matrix->rank() != a.frobenius_matrix->rows()) {
                ++mismatches;
                out << "  Frobenius not injective on a reduced fixture (p = " << p << ")\n";
            }
        }
    }
    REQUIRE_TRUE(checked >= 300);
    REQUIRE_EQ(mismatches, (std::size_t)0);
}

void internal_consistency(std::ostringstream& out) {
    struct Fx {
        std::uint32_t p;
        std::vector<std::string> vars;
        std::vector<std::string> gens;
    };
    for (const auto& fx : std::vector<Fx>{
             {3, {"x", "y", "u", "v"}, kQuadricPair},
             {5, {"x", "y", "u", "v"}, kQuadricPair},
             {2, {"x", "y", "u", "v"}, kDisjointLines},
             {3, {"x", "y", "u", "v"}, kDisjointLines},
             {3, {"x", "y"}, {"x^2 + y^2"}},
             {3, {"x", "y", "z"}, {"x^2 + y*z"}},
             {3, {"x", "y", "z"}, {"x*y"}},
             {2, {"x", "y"}, {"x^2*y + x*y^2"}}}) {
        auto ctx = ring(fx.p, fx.vars);
        auto Isat = saturate_irrelevant(ideal(ctx, fx.gens));
        auto Gsat = buchberger(Isat);
        auto P = find_hsop(Gsat, 1);

        // certified length against the stabilized Koszul dimension: two
        // independent computations of the same number
        FreeResolution res = free_resolution(Isat, ctx->nvars());
        std::size_t ell = ext_strand_length(res, ctx->nvars() - 1, ctx->sigma());
        auto st = stabilize(Gsat, P, ell, 64);
        REQUIRE_EQ(st.basis.dim(), ell);

        // limit maps injective across the first steps
        auto b1 = h1_degree_zero(Gsat, P, 1);
        auto b2 = h1_degree_zero(Gsat, P, 2);
        auto b3 = h1_degree_zero(Gsat, P, 3);
        REQUIRE_EQ(limit_map(Gsat, P, b1, b2).rank(), b1.dim());
        REQUIRE_EQ(limit_map(Gsat, P, b2, b3).rank(), b2.dim());
        REQUIRE_TRUE(b1.dim() <= b2.dim() && b2.dim() <= b3.dim() && b3.dim() <= ell);

        // image chain shape and bijectivity on the stable part
        auto Pw = power_system(Gsat, P, st.n);
        auto B = st.n == 1 ? std::move(st.basis) : h1_degree_zero(Gsat, Pw, 1);
        auto F = build_frobenius(Gsat, Pw, B);
        auto SD = stable_part(F);
        REQUIRE_TRUE(SD.stable_bijective);
        REQUIRE_EQ(SD.image_chain_dims.front(), ell);
        for (std::size_t i = 1; i < SD.image_chain_dims.size(); ++i)
            REQUIRE_TRUE(SD.image_chain_dims[i] <= SD.image_chain_dims[i - 1]);
        REQUIRE_TRUE((SD.stable_dim == 0) == is_f_torsion(F));
    }
}

void base_change(std::ostringstream& out) {
    struct Fx {
        std::uint32_t p;
        std::vector<std::string> vars;
        std::vector<std::string> gens;
    };
    for (const auto& fx : std::vector<Fx>{
             {3, {"x", "y", "u", "v"}, kQuadricPair},
             {5, {"x", "y", "u", "v"}, kQuadricPair},
             {2, {"x", "y", "u", "v"}, kDisjointLines},
             {3, {"x", "y", "u", "v"}, kDisjointLines},
             {5, {"x", "y", "u", "v"}, kDisjointLines},
             {3, {"x", "y", "z"}, {"x^2 + y*z"}},
             {3, {"x", "y", "z"}, {"x*y"}},
             {3, {"x", "y"}, {"x^2 + y^2"}},
             {3, {"x", "y", "z"}, {}}}) {
        auto base = run_pipeline(spec_of(fx.p, fx.vars, fx.gens, 1));
        auto ext = run_pipeline(spec_of(fx.p, fx.vars, fx.gens, 2));
        REQUIRE_EQ(base.components, ext.components);
    }
}

void property_scalar_frobenius(std::ostringstream& out) {
    std::size_t cases = 0;
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4},
             {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 6}, {3, 4}}) {
        Field f(p, e);
        const std::uint64_t q = f.size();
        std::vector<bool> seen(q, false);
        for (std::uint64_t a = 0; a < q; ++a) {
            Fq fa = f.frobenius(f.element(a));
            if (seen[fa.raw]) out << "  frobenius not injective on F_" << q << "\n";
            seen[fa.raw] = true;
            if (!(f.pth_root(fa) == f.element(a)))
                out << "  pth_root fails on F_" << q << "\n";
            for (std::uint64_t step : {3ull, 7ull, 11ull, 13ull}) {
                Fq b = f.element((a * step + step / 2) % q);
                if (!(f.frobenius(f.add(f.element(a), b)) ==
                      f.add(f.frobenius(f.element(a)), f.frobenius(b))))
                    out << "  frobenius not additive on F_" << q << "\n";
                if (!(f.frobenius(f.mul(f.element(a), b)) ==
                      f.mul(f.frobenius(f.element(a)), f.frobenius(b))))
                    out << "  frobenius not multiplicative on F_" << q << "\n";
                ++cases;
            }
        }
    }
    REQUIRE_TRUE(cases >= 1000);
}

void property_freshman(std::ostringstream& out) {
    std::size_t cases = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto ctx = ring(p, {"x", "y", "z"});
        SplitMix64 rng(p * 11 + 1);
        for (int k = 0; k < 334; ++k) {
            Polynomial f = random_poly(ctx, rng);
            Polynomial rhs = Polynomial::constant(ctx, ctx->field()->one());
            for (std::uint32_t i = 0; i < p; ++i) rhs = rhs * f;
            if (!(f.pth_power() == rhs)) out << "  pth_power mismatch (p = " << p << ")\n";
            ++cases;
        }
    }
    REQUIRE_TRUE(cases >= 1000);
}

void property_gb_uniqueness(std::ostringstream& out) {
    SplitMix64 rng(2718);
    std::size_t cases = 0;
    while (cases < 1000) {
        std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[rng.below(3)];
        auto ctx = ring(p, {"x", "y", "z"});
        std::vector<Polynomial> gens;
        std::size_t n = 2 + rng.below(2);
        for (std::size_t g = 0; g < n; ++g)
            gens.push_back(random_homogeneous(ctx, rng, 1 + rng.below(3), 3));
        auto G1 = buchberger(Ideal(ctx, gens));
        std::vector<Polynomial> shuffled = gens;
        for (std::size_t i = shuffled.size(); i-- > 1;)
            std::swap(shuffled[i], shuffled[rng.below(i + 1)]);
        auto G2 = buchberger(Ideal(ctx, shuffled));
        if (!(G1 == G2)) out << "  reduced basis depends on generator order\n";
        ++cases;
    }
}

void property_quotient_saturation(std::ostringstream& out) {
    SplitMix64 rng(886);
    std::size_t membership = 0, saturations = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto ctx = ring(p, {"x", "y", "z"});
        for (int rep = 0; rep < 12; ++rep) {
            std::vector<Polynomial> gens;
            for (int g = 0; g < 2; ++g)
                gens.push_back(random_homogeneous(ctx, rng, 1 + rng.below(2)));
            Polynomial f = random_homogeneous(ctx, rng, 1 + rng.below(2));
            Ideal I(ctx, gens);
            auto GI = buchberger(I);
            auto GQ = buchberger(ideal_quotient(I, f));
            for (int k = 0; k < 28; ++k) {
                Polynomial g = random_poly(ctx, rng, 3, 2);
                bool in_quotient = normal_form(g, GQ).is_zero();
                bool product_in = normal_form(g * f, GI).is_zero();
                if (in_quotient != product_in)
                    out << "  quotient membership identity fails (p = " << p << ")\n";
                ++membership;
            }
        }
        // saturation: idempotent and monotone
        auto kxy = ring(p, {"x", "y"});
        for (int rep = 0; rep < 100; ++rep) {
            std::vector<Polynomial> gens;
            std::size_t n = 1 + rng.below(2);
            for (std::size_t g = 0; g < n; ++g)
                gens.push_back(random_homogeneous(kxy, rng, 1 + rng.below(3), 2));
            Ideal I(kxy, gens);
            Ideal S = saturate_irrelevant(I);
            if (!(saturate_irrelevant(S) == S)) out << "  saturation not idempotent\n";
            auto GS = buchberger(S);
            for (const auto& g : I.generators())
                if (!normal_form(g, GS).is_zero()) out << "  saturation not monotone\n";
            ++saturations;
        }
    }
    REQUIRE_TRUE(membership >= 1000);
    REQUIRE_TRUE(saturations >= 300);
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"golden-fixture-f3-f5", 5.0, golden_fixture},
        {"disjoint-lines-f2-f3-f5-oracle", 5.0, disjoint_lines},
        {"connected-fixtures", 5.0, connected_fixtures},
        {"dimension-one-pairs", 2.0, dimension_one},
        {"oracle-equivalence-corpus", 600.0, oracle_corpus},
        {"internal-consistency", 120.0, internal_consistency},
        {"base-change-invariance", 120.0, base_change},
        {"property-scalar-frobenius", 60.0, property_scalar_frobenius},
        {"property-freshman-dream", 60.0, property_freshman},
        {"property-gb-uniqueness", 120.0, property_gb_uniqueness},
        {"property-quotient-saturation", 120.0, property_quotient_saturation},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::ostringstream out;
        auto start = std::chrono::steady_clock::now();
        bool threw = false;
        std::string what;
        try {
            c.run(out);
        } catch (const std::exception& e) {
            threw = true;
            what = e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = !threw && out.str().empty() && seconds < c.budget_seconds;
        if (!ok) ++failures;
        std::printf("[%s] %-32s (%.3f s, budget %.0f s)\n", ok ? "PASS" : "FAIL",
                    c.name.c_str(), seconds, c.budget_seconds);
        if (threw) std::printf("  exception: %s\n", what.c_str());
        if (!out.str().empty()) std::fputs(out.str().c_str(), stdout);
        if (!threw && out.str().empty() && seconds >= c.budget_seconds)
            std::printf("  over budget\n");
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
