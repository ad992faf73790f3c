#include "geoconn/poly.hpp"

#include <algorithm>
#include <map>

namespace geoconn {

Polynomial Polynomial::zero(RingPtr ctx) { return Polynomial(std::move(ctx), {}); }

Polynomial Polynomial::constant(RingPtr ctx, Fq c) {
    if (ctx->field()->is_zero(c)) return zero(std::move(ctx));
    std::vector<Term> t{{Monomial::one(ctx->nvars()), c}};
    return Polynomial(std::move(ctx), std::move(t));
}

Polynomial Polynomial::monomial(RingPtr ctx, Monomial m, Fq c) {
    if (ctx->field()->is_zero(c)) return zero(std::move(ctx));
    std::vector<Term> t{{std::move(m), c}};
    return Polynomial(std::move(ctx), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ctx, std::size_t i) {
    Monomial m = Monomial::variable(ctx->nvars(), i);
    return monomial(std::move(ctx), std::move(m), Fq{1});
}

Polynomial Polynomial::from_terms(RingPtr ctx, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ctx->compare(a.mono, b.mono) > 0;
    });
    const Field& F = *ctx->field();
    std::vector<Term> out;
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = F.add(out.back().coeff, t.coeff);
            if (F.is_zero(out.back().coeff)) out.pop_back();
        } else if (!F.is_zero(t.coeff)) {
            out.push_back(std::move(t));
        }
    }
    return Polynomial(std::move(ctx), std::move(out));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw value_error("zero polynomial has no leading term");
    return terms_.front();
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ctx(), b.ctx())) throw value_error("ring context mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(*this, o);
    const Field& F = *ctx_->field();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ctx_->compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            Fq s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (!F.is_zero(s)) out.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::negated() const {
    const Field& F = *ctx_->field();
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff = F.neg(t.coeff);
    return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.negated(); }

Polynomial Polynomial::scaled(Fq c) const {
    const Field& F = *ctx_->field();
    if (F.is_zero(c)) return zero(ctx_);
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff = F.mul(t.coeff, c);
    return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::mul_term(const Monomial& m, Fq c) const {
    const Field& F = *ctx_->field();
    if (F.is_zero(c)) return zero(ctx_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    // multiplicativity of the order keeps the list sorted
    for (const auto& t : terms_) out.push_back({t.mono.mul(m), F.mul(t.coeff, c)});
    return Polynomial(ctx_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(*this, o);
    if (is_zero() || o.is_zero()) return zero(ctx_);
    const Field& F = *ctx_->field();
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            prod.push_back({a.mono.mul(b.mono), F.mul(a.coeff, b.coeff)});
    return from_terms(ctx_, std::move(prod));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(ctx_->field()->inv(leading_coeff()));
}

Polynomial Polynomial::pow(std::uint32_t k) const {
    Polynomial result = constant(ctx_, ctx_->field()->one());
    Polynomial base = *this;
    while (k) {
        if (k & 1) result = result * base;
        if (k >>= 1) base = base * base;
    }
    return result;
}

Polynomial Polynomial::pth_power() const {
    const Field& F = *ctx_->field();
    const std::uint32_t p = F.characteristic();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono.power(p), F.frobenius(t.coeff)});
    // exponent map m -> m^p preserves the order strictly
    return Polynomial(ctx_, std::move(out));
}

HomogeneityInfo Polynomial::homogeneity() const {
    if (is_zero()) throw value_error("zero polynomial has no degree");
    std::uint64_t d = ctx_->weighted_degree(terms_[0].mono);
    for (const auto& t : terms_)
        if (ctx_->weighted_degree(t.mono) != d) return {false, std::nullopt};
    return {true, d};
}

std::uint64_t Polynomial::degree() const {
    if (is_zero()) throw value_error("zero polynomial has no degree");
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, ctx_->weighted_degree(t.mono));
    return d;
}

std::vector<Polynomial> Polynomial::homogeneous_components() const {
    std::map<std::uint64_t, std::vector<Term>> buckets;
    for (const auto& t : terms_) buckets[ctx_->weighted_degree(t.mono)].push_back(t);
    std::vector<Polynomial> out;
    for (auto& [d, terms] : buckets) out.push_back(Polynomial(ctx_, std::move(terms)));
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ctx_, o.ctx_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    const Field& F = *ctx_->field();
    const std::uint32_t e = F.extension_degree();
    std::string s;
    auto emit = [&](std::uint32_t digit, std::uint32_t tpow, const Monomial& m) {
        std::string part;
        bool have_factor = tpow > 0 || !m.is_one();
        if (digit != 1 || !have_factor) part += std::to_string(digit);
        if (tpow > 0) {
            if (!part.empty()) part += "*";
            part += "t";
            if (tpow > 1) part += "^" + std::to_string(tpow);
        }
        for (std::size_t i = 0; i < ctx_->nvars(); ++i) {
            std::uint32_t ex = m.exponent(i);
            if (ex == 0) continue;
            if (!part.empty()) part += "*";
            part += ctx_->variable_name(i);
            if (ex > 1) part += "^" + std::to_string(ex);
        }
        if (!s.empty()) s += " + ";
        s += part;
    };
    for (const auto& t : terms_) {
        auto digits = F.digits(t.coeff);
        for (std::uint32_t k = e; k-- > 0;)
            if (digits[k] != 0) emit(digits[k], k, t.mono);
    }
    return s;
}

Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
    require_same_ring(g, f);
    if (f.is_zero()) throw value_error("division by the zero polynomial");
    const Field& F = *g.ctx()->field();
    Polynomial q = Polynomial::zero(g.ctx());
    Polynomial h = g;
    while (!h.is_zero()) {
        const Term& lt = h.leading_term();
        if (!f.leading_monomial().divides(lt.mono))
            throw value_error("polynomial division is not exact");
        Monomial m = lt.mono.divide(f.leading_monomial());
        Fq c = F.div(lt.coeff, f.leading_coeff());
        q = q + Polynomial::monomial(g.ctx(), m, c);
        h = h - f.mul_term(m, c);
    }
    return q;
}

} // namespace geoconn
