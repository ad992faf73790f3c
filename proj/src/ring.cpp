#include "geoconn/ring.hpp"

#include <algorithm>
#include <cctype>

namespace geoconn {

namespace {
constexpr std::uint32_t kMaxExponent = 0x7fffffffu;
constexpr std::uint32_t kMaxWeight = 1u << 20;
constexpr std::size_t kMaxVars = 64;

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha((unsigned char)s[0]) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum((unsigned char)c) || c == '_')) return false;
    return true;
}
} // namespace

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t exp) {
    std::vector<std::uint32_t> e(nvars, 0);
    e[i] = exp;
    return Monomial(std::move(e));
}

bool Monomial::is_one() const {
    for (auto x : e_)
        if (x) return false;
    return true;
}

Monomial Monomial::mul(const Monomial& o) const {
    std::vector<std::uint32_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint64_t s = (std::uint64_t)e_[i] + o.e_[i];
        if (s > kMaxExponent) throw value_error("monomial exponent overflow");
        e[i] = (std::uint32_t)s;
    }
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o) const {
    std::vector<std::uint32_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (o.e_[i] > e_[i]) throw value_error("monomial division is not exact");
        e[i] = e_[i] - o.e_[i];
    }
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& o) const {
    std::vector<std::uint32_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e[i] = std::max(e_[i], o.e_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

Monomial Monomial::power(std::uint32_t k) const {
    std::vector<std::uint32_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint64_t s = (std::uint64_t)e_[i] * k;
        if (s > kMaxExponent) throw value_error("monomial exponent overflow");
        e[i] = (std::uint32_t)s;
    }
    return Monomial(std::move(e));
}

RingContext::RingContext(FieldPtr field, std::vector<std::string> variables,
                         std::vector<std::uint32_t> weights, MonomialOrder order)
    : field_(std::move(field)), vars_(std::move(variables)),
      weights_(std::move(weights)), order_(order) {
    if (!field_) throw value_error("ring requires a field");
    if (vars_.empty()) throw value_error("ring requires at least one variable");
    if (vars_.size() > kMaxVars) throw value_error("too many variables");
    if (weights_.empty()) weights_.assign(vars_.size(), 1);
    if (weights_.size() != vars_.size())
        throw value_error("weight count must match variable count");
    for (auto w : weights_)
        if (w < 1 || w > kMaxWeight) throw value_error("weights must be in [1, 2^20]");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!valid_identifier(vars_[i])) throw value_error("invalid variable name: " + vars_[i]);
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw value_error("duplicate variable name: " + vars_[i]);
    }
    if (field_->extension_degree() > 1)
        for (const auto& v : vars_)
            if (v == "t") throw value_error("variable name t is reserved for the field generator");
    if (order_.kind == OrderKind::Block && (order_.block == 0 || order_.block >= vars_.size()))
        throw value_error("elimination block size out of range");
}

std::uint64_t RingContext::sigma() const {
    std::uint64_t s = 0;
    for (auto w : weights_) s += w;
    return s;
}

int RingContext::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return (int)i;
    return -1;
}

std::uint64_t RingContext::weighted_degree(const Monomial& m) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        d += (std::uint64_t)weights_[i] * m.exponent(i);
    return d;
}

int RingContext::cmp_grevlex(const Monomial& a, const Monomial& b,
                             std::size_t lo, std::size_t hi) const {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += (std::uint64_t)weights_[i] * a.exponent(i);
        db += (std::uint64_t)weights_[i] * b.exponent(i);
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) > b.exponent(i) ? -1 : 1;
    }
    return 0;
}

int RingContext::compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = vars_.size();
    switch (order_.kind) {
    case OrderKind::Grevlex:
        return cmp_grevlex(a, b, 0, n);
    case OrderKind::Lex:
        for (std::size_t i = 0; i < n; ++i)
            if (a.exponent(i) != b.exponent(i))
                return a.exponent(i) > b.exponent(i) ? 1 : -1;
        return 0;
    case OrderKind::Block: {
        int c = cmp_grevlex(a, b, 0, order_.block);
        if (c) return c;
        return cmp_grevlex(a, b, order_.block, n);
    }
    }
    return 0;
}

bool RingContext::operator==(const RingContext& o) const {
    return *field_ == *o.field_ && vars_ == o.vars_ && weights_ == o.weights_ &&
           order_ == o.order_;
}

RingPtr make_ring(FieldPtr field, std::vector<std::string> variables,
                  std::vector<std::uint32_t> weights, MonomialOrder order) {
    return std::make_shared<RingContext>(std::move(field), std::move(variables),
                                         std::move(weights), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

std::vector<Monomial> monomials_of_degree(const RingPtr& ctx, std::uint64_t degree) {
    const std::size_t n = ctx->nvars();
    std::vector<Monomial> out;
    std::vector<std::uint32_t> exps(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t remaining) -> void {
        if (i + 1 == n) {
            std::uint32_t w = ctx->weight(i);
            if (remaining % w == 0 && remaining / w <= 0x7fffffffu) {
                exps[i] = (std::uint32_t)(remaining / w);
                out.emplace_back(exps);
                exps[i] = 0;
            }
            return;
        }
        std::uint32_t w = ctx->weight(i);
        for (std::uint64_t e = 0; e * w <= remaining; ++e) {
            exps[i] = (std::uint32_t)e;
            self(self, i + 1, remaining - e * w);
        }
        exps[i] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return ctx->compare(a, b) > 0;
    });
    return out;
}

} // namespace geoconn
