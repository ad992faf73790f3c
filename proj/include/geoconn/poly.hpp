#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geoconn/ring.hpp"

namespace geoconn {

struct Term {
    Monomial mono;
    Fq coeff;
};

struct HomogeneityInfo {
    bool homogeneous = false;
    std::optional<std::uint64_t> degree; // set iff homogeneous
};

/// Multivariate polynomial over the ring's coefficient field. Terms are
/// kept strictly descending in the ring's monomial order with no zero
/// coefficients; the representation is canonical, so operator== is
/// structural equality of values.
class Polynomial {
public:
    static Polynomial zero(RingPtr ctx);
    static Polynomial constant(RingPtr ctx, Fq c);
    static Polynomial monomial(RingPtr ctx, Monomial m, Fq c);
    static Polynomial variable(RingPtr ctx, std::size_t i);
    /// Collects, sorts and prunes an arbitrary term list.
    static Polynomial from_terms(RingPtr ctx, std::vector<Term> terms);

    const RingPtr& ctx() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    Fq leading_coeff() const { return leading_term().coeff; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial negated() const;
    Polynomial scaled(Fq c) const;
    Polynomial mul_term(const Monomial& m, Fq c) const;
    Polynomial monic() const;
    Polynomial pow(std::uint32_t k) const;

    /// f^p computed termwise via the characteristic-p identity
    /// (sum c_i m_i)^p = sum c_i^p m_i^p.
    Polynomial pth_power() const;

    /// Weighted degree and homogeneity; rejects the zero polynomial.
    HomogeneityInfo homogeneity() const;
    /// Max weighted degree over all terms (not order-dependent).
    std::uint64_t degree() const;

    /// Buckets of equal weighted degree, ascending degree.
    std::vector<Polynomial> homogeneous_components() const;

    /// Canonical text form; parse_polynomial(to_string(f)) == f.
    std::string to_string() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    Polynomial(RingPtr ctx, std::vector<Term> terms)
        : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

    RingPtr ctx_;
    std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& a, const Polynomial& b);

/// g = q * f exactly; throws when f does not divide g.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f);

} // namespace geoconn
