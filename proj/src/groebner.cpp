#include "geoconn/groebner.hpp"

#include <algorithm>
#include <bit>

namespace geoconn {

Ideal::Ideal(RingPtr ctx, std::vector<Polynomial> generators) : ctx_(std::move(ctx)) {
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ctx(), ctx_)) throw value_error("generator from a different ring");
        if (!g.homogeneity().homogeneous)
            throw value_error("ideal generator is not homogeneous: " + g.to_string());
        gens_.push_back(std::move(g));
    }
}

bool GroebnerBasis::is_unit_ideal() const {
    return elems_.size() == 1 && elems_[0].leading_monomial().is_one();
}

namespace {

// Full division: reduce every term of f by the first basis element whose
// leading monomial divides it.
Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis) {
    const RingPtr& ctx = f.ctx();
    const Field& F = *ctx->field();
    Polynomial h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        const Polynomial* divisor = nullptr;
        for (const auto& g : basis) {
            if (g.leading_monomial().divides(lt.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            Monomial m = lt.mono.divide(divisor->leading_monomial());
            Fq c = F.div(lt.coeff, divisor->leading_coeff());
            h = h - divisor->mul_term(m, c);
        } else {
            remainder.push_back(lt);
            h = h - Polynomial::monomial(ctx, lt.mono, lt.coeff);
        }
    }
    return Polynomial::from_terms(ctx, std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Field& F = *f.ctx()->field();
    Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    Polynomial a = f.mul_term(l.divide(f.leading_monomial()), F.inv(f.leading_coeff()));
    Polynomial b = g.mul_term(l.divide(g.leading_monomial()), F.inv(g.leading_coeff()));
    return a - b;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t sugar = 0;
};

class BuchbergerRun {
public:
    BuchbergerRun(const RingPtr& ctx, const BuchbergerOptions& opts)
        : ctx_(ctx), opts_(opts) {}

    void add_generator(const Polynomial& g) {
        Polynomial r = reduce_full(g, basis_);
        if (r.is_zero()) return;
        install(r.monic());
    }

    std::vector<Polynomial> run() {
        while (!pairs_.empty()) {
            Pair pr = pop_best();
            Polynomial s = s_polynomial(basis_[pr.i], basis_[pr.j]);
            Polynomial r = reduce_full(s, basis_);
            if (!r.is_zero()) install(r.monic());
        }
        return reduced_basis();
    }

private:
    // Gebauer-Moeller update: screen the new pairs against each other
    // (divisor and coprime criteria), then prune old pairs by the chain
    // criterion.
    void install(const Polynomial& h) {
        const std::size_t t = basis_.size();
        const Monomial& lmh = h.leading_monomial();
        std::uint64_t sug_h = sugar_degree(h);

        std::vector<Pair> cand;
        cand.reserve(t);
        for (std::size_t i = 0; i < t; ++i) {
            Pair p{i, t, lmh.lcm(basis_[i].leading_monomial()), 0};
            p.sugar = pair_sugar(p.i, p.lcm, sug_h, lmh);
            cand.push_back(std::move(p));
        }
        std::sort(cand.begin(), cand.end(), [&](const Pair& a, const Pair& b) {
            int c = ctx_->compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return a.i < b.i;
        });

        // lcm values for which some pair has coprime heads: all pairs with
        // that lcm may be dropped
        std::vector<Monomial> coprime_lcms;
        for (const auto& p : cand)
            if (lmh.coprime(basis_[p.i].leading_monomial())) coprime_lcms.push_back(p.lcm);

        std::vector<Pair> kept;
        for (auto& p : cand) {
            bool drop = false;
            for (const auto& m : coprime_lcms) {
                if (m == p.lcm) {
                    drop = true;
                    break;
                }
            }
            if (!drop) {
                for (const auto& k : kept) {
                    if (k.lcm.divides(p.lcm)) { // equal lcm drops too (keep first)
                        drop = true;
                        break;
                    }
                }
            }
            if (!drop) kept.push_back(std::move(p));
        }

        // chain criterion on the surviving old pairs
        std::vector<Pair> old;
        old.reserve(pairs_.size());
        for (auto& p : pairs_) {
            const Monomial& l = p.lcm;
            bool drop = lmh.divides(l) &&
                        lmh.lcm(basis_[p.i].leading_monomial()) != l &&
                        lmh.lcm(basis_[p.j].leading_monomial()) != l;
            if (!drop) old.push_back(std::move(p));
        }
        pairs_ = std::move(old);
        for (auto& p : kept) pairs_.push_back(std::move(p));

        basis_.push_back(h);
        sugars_.push_back(sug_h);
    }

    std::uint64_t sugar_degree(const Polynomial& f) const { return f.degree(); }

    // sugar of the S-polynomial: max over the two cofactor products
    std::uint64_t pair_sugar(std::size_t i, const Monomial& lcm, std::uint64_t sug_new,
                             const Monomial& lm_new) const {
        std::uint64_t a =
            sugars_[i] + ctx_->weighted_degree(lcm.divide(basis_[i].leading_monomial()));
        std::uint64_t b = sug_new + ctx_->weighted_degree(lcm.divide(lm_new));
        return std::max(a, b);
    }

    Pair pop_best() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            if (pair_less(pairs_[k], pairs_[best])) best = k;
        }
        Pair p = std::move(pairs_[best]);
        pairs_.erase(pairs_.begin() + (long)best);
        return p;
    }

    bool pair_less(const Pair& a, const Pair& b) const {
        if (opts_.sugar && a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = ctx_->compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }

    std::vector<Polynomial> reduced_basis() {
        // minimal heads
        std::vector<std::size_t> order(basis_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            int c = ctx_->compare(basis_[a].leading_monomial(), basis_[b].leading_monomial());
            if (c != 0) return c < 0;
            return a < b;
        });
        std::vector<Polynomial> minimal;
        for (std::size_t idx : order) {
            const Monomial& lm = basis_[idx].leading_monomial();
            bool redundant = false;
            for (const auto& kept : minimal) {
                if (kept.leading_monomial().divides(lm)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) minimal.push_back(basis_[idx]);
        }
        // tail reduction to a fixpoint
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < minimal.size(); ++i) {
                std::vector<Polynomial> others;
                others.reserve(minimal.size() - 1);
                for (std::size_t j = 0; j < minimal.size(); ++j)
                    if (j != i) others.push_back(minimal[j]);
                Polynomial r = reduce_full(minimal[i], others).monic();
                if (r != minimal[i]) {
                    minimal[i] = std::move(r);
                    changed = true;
                }
            }
        }
        std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
            return ctx_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        return minimal;
    }

    RingPtr ctx_;
    BuchbergerOptions opts_;
    std::vector<Polynomial> basis_;
    std::vector<std::uint64_t> sugars_;
    std::vector<Pair> pairs_;
};

} // namespace

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts) {
    BuchbergerRun run(ideal.ctx(), opts);
    for (const auto& g : ideal.generators()) run.add_generator(g);
    return GroebnerBasis(ideal.ctx(), run.run());
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (!same_ring(f.ctx(), G.ctx())) throw value_error("ring context mismatch");
    return reduce_full(f, G.elements());
}

namespace {

// Extended ring with one fresh variable in front and an order eliminating it.
struct EliminationRing {
    RingPtr ctx;

    explicit EliminationRing(const RingPtr& base) {
        std::string aux = "__e0";
        for (int k = 1; base->var_index(aux) >= 0; ++k) aux = "__e" + std::to_string(k);
        std::vector<std::string> vars{aux};
        vars.insert(vars.end(), base->variables().begin(), base->variables().end());
        std::vector<std::uint32_t> weights{1};
        weights.insert(weights.end(), base->weights().begin(), base->weights().end());
        ctx = make_ring(base->field(), std::move(vars), std::move(weights),
                        MonomialOrder::elimination_block(1));
    }

    Polynomial embed(const Polynomial& f) const {
        std::vector<Term> terms;
        terms.reserve(f.term_count());
        for (const auto& t : f.terms()) {
            std::vector<std::uint32_t> e(ctx->nvars(), 0);
            for (std::size_t i = 0; i < t.mono.nvars(); ++i) e[i + 1] = t.mono.exponent(i);
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(ctx, std::move(terms));
    }

    Polynomial aux_var() const { return Polynomial::variable(ctx, 0); }

    // Member of the base ring: every exponent of the auxiliary variable is 0.
    bool in_base(const Polynomial& f) const {
        for (const auto& t : f.terms())
            if (t.mono.exponent(0) != 0) return false;
        return true;
    }

    Polynomial restrict_to_base(const Polynomial& f, const RingPtr& base) const {
        std::vector<Term> terms;
        terms.reserve(f.term_count());
        for (const auto& t : f.terms()) {
            std::vector<std::uint32_t> e(base->nvars());
            for (std::size_t i = 0; i < base->nvars(); ++i) e[i] = t.mono.exponent(i + 1);
            terms.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(base, std::move(terms));
    }
};

// Generators of the intersection of two ideals given by generator lists;
// the auxiliary computation is inhomogeneous, so the result is split into
// homogeneous components at the end.
std::vector<Polynomial> intersection_generators(const RingPtr& ctx,
                                                const std::vector<Polynomial>& a,
                                                const std::vector<Polynomial>& b) {
    EliminationRing ext(ctx);
    Polynomial w = ext.aux_var();
    Polynomial one = Polynomial::constant(ext.ctx, ext.ctx->field()->one());
    std::vector<Polynomial> gens;
    for (const auto& f : a) gens.push_back(w * ext.embed(f));
    for (const auto& g : b) gens.push_back((one - w) * ext.embed(g));

    // generators here are inhomogeneous; bypass the Ideal homogeneity check
    BuchbergerRun run(ext.ctx, {});
    for (const auto& g : gens) run.add_generator(g);
    std::vector<Polynomial> gb = run.run();

    std::vector<Polynomial> out;
    for (const auto& g : gb) {
        if (!ext.in_base(g)) continue;
        Polynomial h = ext.restrict_to_base(g, ctx);
        for (auto& comp : h.homogeneous_components()) out.push_back(std::move(comp));
    }
    return out;
}

Ideal canonical(const Ideal& I) { return buchberger(I).ideal(); }

} // namespace

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
    if (!same_ring(I.ctx(), f.ctx())) throw value_error("ring context mismatch");
    if (f.is_zero()) throw value_error("quotient by the zero polynomial");
    if (!f.homogeneity().homogeneous)
        throw value_error("quotient by an inhomogeneous polynomial");
    if (f.leading_monomial().is_one()) return canonical(I); // (I : unit) = I
    if (I.is_zero_ideal()) return I;

    auto meet = intersection_generators(I.ctx(), I.generators(), {f});
    std::vector<Polynomial> quotient_gens;
    quotient_gens.reserve(meet.size());
    for (const auto& g : meet) quotient_gens.push_back(divide_exact(g, f));
    return canonical(Ideal(I.ctx(), std::move(quotient_gens)));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ctx(), b.ctx())) throw value_error("ring context mismatch");
    if (a.is_zero_ideal()) return a;
    if (b.is_zero_ideal()) return b;
    auto meet = intersection_generators(a.ctx(), a.generators(), b.generators());
    return canonical(Ideal(a.ctx(), std::move(meet)));
}

Ideal saturate_irrelevant(const Ideal& I) {
    const RingPtr& ctx = I.ctx();
    Ideal cur = canonical(I);
    for (;;) {
        std::vector<Ideal> quotients;
        bool all_equal = true;
        for (std::size_t i = 0; i < ctx->nvars(); ++i) {
            Ideal q = ideal_quotient(cur, Polynomial::variable(ctx, i));
            if (!(q == cur)) all_equal = false;
            quotients.push_back(std::move(q));
        }
        if (all_equal) return cur;
        // (cur : M) = intersection of the variable quotients; stop when it
        // adds nothing (a quotient by a variable inside cur is the unit
        // ideal, so all_equal alone is not a stopping test)
        Ideal next = quotients[0];
        for (std::size_t i = 1; i < quotients.size(); ++i)
            next = ideal_intersection(next, quotients[i]);
        if (next == cur) return cur;
        cur = std::move(next);
    }
}

int krull_dimension(const GroebnerBasis& G) {
    const std::size_t n = G.ctx()->nvars();
    std::vector<std::uint64_t> supports;
    for (const auto& g : G.elements()) {
        std::uint64_t mask = 0;
        const Monomial& lm = g.leading_monomial();
        for (std::size_t i = 0; i < n; ++i)
            if (lm.exponent(i)) mask |= 1ull << i;
        if (mask == 0) return -1; // unit ideal
        supports.push_back(mask);
    }
    // keep inclusion-minimal supports
    std::vector<std::uint64_t> minimal;
    std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    for (auto m : supports) {
        bool dominated = false;
        for (auto s : minimal)
            if ((s & m) == s) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(m);
    }
    // smallest hitting set of the supports; dim = n - |hitting set|
    std::size_t best = n + 1;
    auto rec = [&](auto&& self, std::size_t idx, std::uint64_t chosen,
                   std::size_t count) -> void {
        if (count >= best) return;
        while (idx < minimal.size() && (minimal[idx] & chosen)) ++idx;
        if (idx == minimal.size()) {
            best = count;
            return;
        }
        std::uint64_t support = minimal[idx];
        for (std::size_t v = 0; v < n; ++v)
            if (support & (1ull << v)) self(self, idx + 1, chosen | (1ull << v), count + 1);
    };
    rec(rec, 0, 0, 0);
    return (int)n - (int)best;
}

long StrandBasis::index_of(const Monomial& m) const {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m,
                               [&](const Monomial& a, const Monomial& b) {
                                   return ctx->compare(a, b) > 0;
                               });
    if (it == monomials.end() || !(*it == m)) return -1;
    return it - monomials.begin();
}

StrandBasis strand_basis(const GroebnerBasis& G, std::uint64_t degree) {
    StrandBasis B{G.ctx(), degree, {}};
    for (auto& m : monomials_of_degree(G.ctx(), degree)) {
        bool standard = true;
        for (const auto& g : G.elements()) {
            if (g.leading_monomial().divides(m)) {
                standard = false;
                break;
            }
        }
        if (standard) B.monomials.push_back(std::move(m));
    }
    return B;
}

std::vector<Fq> coords_in_strand(const Polynomial& f, const StrandBasis& B,
                                 const GroebnerBasis& G) {
    const Field& F = *B.ctx->field();
    std::vector<Fq> v(B.size(), F.zero());
    Polynomial nf = normal_form(f, G);
    for (const auto& t : nf.terms()) {
        long idx = B.index_of(t.mono);
        if (idx < 0) throw value_error("polynomial does not lie in the strand degree");
        v[(std::size_t)idx] = t.coeff;
    }
    return v;
}

} // namespace geoconn
