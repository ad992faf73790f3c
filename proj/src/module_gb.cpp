#include "geoconn/module_gb.hpp"

#include <algorithm>

namespace geoconn {

ModPoly ModPoly::from_terms(RingPtr ctx, std::uint32_t ncomp, std::uint32_t split,
                            std::vector<ModTerm> terms) {
    ModPoly f(std::move(ctx), ncomp, split);
    std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) {
        return f.compare_terms(a, b) > 0;
    });
    const Field& F = *f.ctx_->field();
    for (auto& t : terms) {
        if (!f.terms_.empty() && f.terms_.back().comp == t.comp &&
            f.terms_.back().mono == t.mono) {
            f.terms_.back().coeff = F.add(f.terms_.back().coeff, t.coeff);
            if (F.is_zero(f.terms_.back().coeff)) f.terms_.pop_back();
        } else if (!F.is_zero(t.coeff)) {
            f.terms_.push_back(std::move(t));
        }
    }
    return f;
}

const ModTerm& ModPoly::leading_term() const {
    if (terms_.empty()) throw value_error("zero module element has no leading term");
    return terms_.front();
}

int ModPoly::compare_terms(const ModTerm& a, const ModTerm& b) const {
    const bool a_lead = a.comp < split_;
    const bool b_lead = b.comp < split_;
    if (a_lead != b_lead) return a_lead ? 1 : -1;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1; // lower index bigger
    return ctx_->compare(a.mono, b.mono);
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    const Field& F = *ctx_->field();
    ModPoly out(ctx_, ncomp_, split_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = compare_terms(terms_[i], o.terms_[j]);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Fq s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!F.is_zero(s)) out.terms_.push_back({terms_[i].comp, terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

ModPoly ModPoly::negated() const {
    const Field& F = *ctx_->field();
    ModPoly out = *this;
    for (auto& t : out.terms_) t.coeff = F.neg(t.coeff);
    return out;
}

ModPoly ModPoly::operator-(const ModPoly& o) const { return *this + o.negated(); }

ModPoly ModPoly::mul_term(const Monomial& m, Fq c) const {
    const Field& F = *ctx_->field();
    ModPoly out(ctx_, ncomp_, split_);
    if (F.is_zero(c)) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        out.terms_.push_back({t.comp, t.mono.mul(m), F.mul(t.coeff, c)});
    return out;
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    const Field& F = *ctx_->field();
    Fq inv = F.inv(leading_term().coeff);
    ModPoly out = *this;
    for (auto& t : out.terms_) t.coeff = F.mul(t.coeff, inv);
    return out;
}

bool ModPoly::in_trailing_block() const {
    for (const auto& t : terms_)
        if (t.comp < split_) return false;
    return true;
}

bool ModPoly::operator==(const ModPoly& o) const {
    if (ncomp_ != o.ncomp_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].comp != o.terms_[i].comp || terms_[i].mono != o.terms_[i].mono ||
            terms_[i].coeff != o.terms_[i].coeff)
            return false;
    }
    return true;
}

ModPoly module_reduce(const ModPoly& f, const std::vector<ModPoly>& basis) {
    const Field& F = *f.ctx()->field();
    ModPoly h = f;
    std::vector<ModTerm> remainder;
    while (!h.is_zero()) {
        const ModTerm& lt = h.leading_term();
        const ModPoly* divisor = nullptr;
        for (const auto& g : basis) {
            const ModTerm& lg = g.leading_term();
            if (lg.comp == lt.comp && lg.mono.divides(lt.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            Monomial m = lt.mono.divide(divisor->leading_term().mono);
            Fq c = F.div(lt.coeff, divisor->leading_term().coeff);
            h = h - divisor->mul_term(m, c);
        } else {
            remainder.push_back(lt);
            h = h - ModPoly::from_terms(f.ctx(), f.ncomp(), f.split(), {lt});
        }
    }
    return ModPoly::from_terms(f.ctx(), f.ncomp(), f.split(), std::move(remainder));
}

namespace {

struct ModPair {
    std::size_t i, j;
    Monomial lcm;
};

ModPoly module_spair(const ModPoly& f, const ModPoly& g, const Monomial& l) {
    const Field& F = *f.ctx()->field();
    ModPoly a = f.mul_term(l.divide(f.leading_term().mono), F.inv(f.leading_term().coeff));
    ModPoly b = g.mul_term(l.divide(g.leading_term().mono), F.inv(g.leading_term().coeff));
    return a - b;
}

} // namespace

std::vector<ModPoly> module_groebner(const std::vector<ModPoly>& gens) {
    if (gens.empty()) return {};
    const RingPtr& ctx = gens[0].ctx();

    std::vector<ModPoly> basis;
    std::vector<ModPair> pairs;

    auto install = [&](const ModPoly& h) {
        std::size_t t = basis.size();
        for (std::size_t i = 0; i < t; ++i) {
            const ModTerm& a = basis[i].leading_term();
            const ModTerm& b = h.leading_term();
            if (a.comp != b.comp) continue;
            pairs.push_back({i, t, a.mono.lcm(b.mono)});
        }
        basis.push_back(h);
    };

    for (const auto& g : gens) {
        ModPoly r = module_reduce(g, basis);
        if (!r.is_zero()) install(r.monic());
    }

    while (!pairs.empty()) {
        // normal strategy: smallest lcm in the ring order, then indices
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const ModPair& a = pairs[k];
            const ModPair& b = pairs[best];
            int c = ctx->compare(a.lcm, b.lcm);
            bool less = c < 0 || (c == 0 && (a.i < b.i || (a.i == b.i && a.j < b.j)));
            if (less) best = k;
        }
        ModPair pr = pairs[best];
        pairs.erase(pairs.begin() + (long)best);
        ModPoly s = module_spair(basis[pr.i], basis[pr.j], pr.lcm);
        ModPoly r = module_reduce(s, basis);
        if (!r.is_zero()) install(r.monic());
    }

    // minimal heads, then tail reduction
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int c = basis[a].compare_terms(basis[a].leading_term(), basis[b].leading_term());
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<ModPoly> minimal;
    for (std::size_t idx : order) {
        const ModTerm& lt = basis[idx].leading_term();
        bool redundant = false;
        for (const auto& kept : minimal) {
            const ModTerm& kl = kept.leading_term();
            if (kl.comp == lt.comp && kl.mono.divides(lt.mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[idx]);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<ModPoly> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            ModPoly r = module_reduce(minimal[i], others).monic();
            if (!(r == minimal[i])) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }
    return minimal;
}

} // namespace geoconn
