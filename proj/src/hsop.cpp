#include "geoconn/hsop.hpp"

#include "geoconn/rng.hpp"

namespace geoconn {

bool certify_nonzerodivisor(const GroebnerBasis& Gsat, const Polynomial& f) {
    if (f.is_zero() || !f.homogeneity().homogeneous)
        throw value_error("nonzerodivisor test needs a nonzero homogeneous form");
    Ideal I = Gsat.ideal();
    return ideal_quotient(I, f) == I;
}

namespace {

int dimension_after(const Ideal& base, const std::vector<Polynomial>& extra) {
    std::vector<Polynomial> gens = base.generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return krull_dimension(buchberger(Ideal(base.ctx(), std::move(gens))));
}

} // namespace

ParameterSystem find_hsop(const GroebnerBasis& Gsat, std::uint64_t seed,
                          const HsopOptions& opts) {
    const RingPtr& ctx = Gsat.ctx();
    const Field& F = *ctx->field();
    if (Gsat.is_unit_ideal()) throw value_error("unit ideal has no parameter system");
    Ideal I = Gsat.ideal();
    const int d = krull_dimension(Gsat);
    if (d < 1) throw value_error("parameter search needs positive dimension");

    SplitMix64 rng(seed);
    ParameterSystem P;

    for (int k = 0; k < d; ++k) {
        bool found = false;
        for (std::uint32_t m = 1; m <= opts.max_degree && !found; ++m) {
            auto mons = monomials_of_degree(ctx, m);
            if (mons.empty()) continue;
            for (std::uint32_t trial = 0; trial < opts.trials_per_degree && !found; ++trial) {
                std::vector<Term> terms;
                terms.reserve(mons.size());
                for (const auto& mono : mons)
                    terms.push_back({mono, F.element(rng.below(F.size()))});
                Polynomial f = Polynomial::from_terms(ctx, std::move(terms));
                if (f.is_zero()) continue;
                f = f.monic();
                if (!certify_nonzerodivisor(Gsat, f)) continue;
                std::vector<Polynomial> prefix = P.forms;
                prefix.push_back(f);
                if (dimension_after(I, prefix) != d - k - 1) continue;
                P.forms.push_back(std::move(f));
                P.degrees.push_back(m);
                found = true;
            }
        }
        if (!found)
            throw budget_error(
                "no nonzerodivisor parameter found within the trial budget; "
                "retry over an extension field F_{p^e}");
    }

    // re-verify all certificates; the search path is not trusted
    P.prefix_dimensions.clear();
    std::vector<Polynomial> prefix;
    for (std::size_t i = 0; i < P.forms.size(); ++i) {
        if (!certify_nonzerodivisor(Gsat, P.forms[i]))
            throw internal_error("parameter system failed re-verification");
        prefix.push_back(P.forms[i]);
        int dim = dimension_after(I, prefix);
        if (dim != d - (int)i - 1)
            throw internal_error("parameter system dimension drop failed");
        P.prefix_dimensions.push_back(dim);
    }
    return P;
}

ParameterSystem power_system(const GroebnerBasis& Gsat, const ParameterSystem& P,
                             std::uint32_t N) {
    if (N == 0) throw value_error("power must be positive");
    if (N == 1) return P;
    Ideal I = Gsat.ideal();
    const int d = krull_dimension(Gsat);
    ParameterSystem out;
    std::vector<Polynomial> prefix;
    for (std::size_t i = 0; i < P.forms.size(); ++i) {
        Polynomial f = P.forms[i].pow(N);
        if (!certify_nonzerodivisor(Gsat, f))
            throw internal_error("powered parameter failed the nonzerodivisor test");
        prefix.push_back(f);
        int dim = dimension_after(I, prefix);
        if (dim != d - (int)i - 1)
            throw internal_error("powered parameter system dimension drop failed");
        out.forms.push_back(std::move(f));
        out.degrees.push_back(P.degrees[i] * N);
        out.prefix_dimensions.push_back(dim);
    }
    return out;
}

} // namespace geoconn
