#pragma once

#include <cstdint>
#include <vector>

#include "geoconn/poly.hpp"

namespace geoconn {

/// Homogeneous ideal given by generators. Zero generators are dropped;
/// the empty list is the zero ideal. Every surviving generator must be
/// homogeneous for the ring's weights.
class Ideal {
public:
    Ideal(RingPtr ctx, std::vector<Polynomial> generators);
    static Ideal zero(RingPtr ctx) { return Ideal(std::move(ctx), {}); }

    const RingPtr& ctx() const { return ctx_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    bool operator==(const Ideal& o) const {
        return same_ring(ctx_, o.ctx_) && gens_ == o.gens_;
    }

private:
    RingPtr ctx_;
    std::vector<Polynomial> gens_;
};

struct BuchbergerOptions {
    bool sugar = false; // sugar-degree pair selection instead of normal strategy
};

/// The unique reduced Groebner basis of an ideal for the ring's monomial
/// order: monic elements, no head divides another head, tails fully
/// reduced, sorted ascending by leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ctx, std::vector<Polynomial> elements)
        : ctx_(std::move(ctx)), elems_(std::move(elements)) {}

    const RingPtr& ctx() const { return ctx_; }
    const std::vector<Polynomial>& elements() const { return elems_; }
    bool is_zero_ideal() const { return elems_.empty(); }
    bool is_unit_ideal() const;
    Ideal ideal() const { return Ideal(ctx_, elems_); }

    bool operator==(const GroebnerBasis& o) const {
        return same_ring(ctx_, o.ctx_) && elems_ == o.elems_;
    }

private:
    RingPtr ctx_;
    std::vector<Polynomial> elems_;
};

GroebnerBasis buchberger(const Ideal& ideal, const BuchbergerOptions& opts = {});

/// Unique remainder of f modulo G; zero iff f lies in the ideal. Linear
/// over the coefficient field.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// (I : f) = { g : g*f in I }, computed through the intersection I meet (f)
/// with one auxiliary variable. Returns the ideal with its reduced
/// Groebner basis as canonical generators.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);

/// Intersection of two homogeneous ideals (same elimination trick).
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// (I : M^inf) for the irrelevant maximal ideal M = (x_1..x_n): iterate
/// J <- intersection of (J : x_i) until stable. Canonical generators.
Ideal saturate_irrelevant(const Ideal& I);

/// Krull dimension of A/I from the leading ideal: the largest size of a
/// variable subset S with no leading monomial supported inside S. The
/// unit ideal reports -1.
int krull_dimension(const GroebnerBasis& G);

/// Monomial basis of the degree-m strand [A/I]_m: the standard monomials
/// of weighted degree m, sorted descending in the ring order.
struct StrandBasis {
    RingPtr ctx;
    std::uint64_t degree = 0;
    std::vector<Monomial> monomials;

    std::size_t size() const { return monomials.size(); }
    /// Index of a monomial, or -1 when absent.
    long index_of(const Monomial& m) const;
};

StrandBasis strand_basis(const GroebnerBasis& G, std::uint64_t degree);

/// Coefficient vector of normal_form(f, G) in the strand basis. f must be
/// homogeneous of the strand degree (or zero).
std::vector<Fq> coords_in_strand(const Polynomial& f, const StrandBasis& B,
                                 const GroebnerBasis& G);

} // namespace geoconn
