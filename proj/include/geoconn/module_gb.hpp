#pragma once

#include <cstdint>
#include <vector>

#include "geoconn/poly.hpp"

namespace geoconn {

/// Term of a free-module element: coefficient * monomial * e_comp.
struct ModTerm {
    std::uint32_t comp = 0;
    Monomial mono;
    Fq coeff;
};

/// Element of a free module A^r, terms sorted strictly descending under a
/// position-over-term order. An elimination split divides the components
/// into a leading block [0, split) and a trailing block [split, r): every
/// term in the leading block beats every term in the trailing block.
class ModPoly {
public:
    ModPoly(RingPtr ctx, std::uint32_t ncomp, std::uint32_t split)
        : ctx_(std::move(ctx)), ncomp_(ncomp), split_(split) {}

    static ModPoly from_terms(RingPtr ctx, std::uint32_t ncomp, std::uint32_t split,
                              std::vector<ModTerm> terms);

    const RingPtr& ctx() const { return ctx_; }
    std::uint32_t ncomp() const { return ncomp_; }
    std::uint32_t split() const { return split_; }
    const std::vector<ModTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const ModTerm& leading_term() const;

    int compare_terms(const ModTerm& a, const ModTerm& b) const;

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly negated() const;
    ModPoly mul_term(const Monomial& m, Fq c) const;
    ModPoly monic() const;

    /// True when every term lies in the trailing block.
    bool in_trailing_block() const;

    bool operator==(const ModPoly& o) const;

private:
    RingPtr ctx_;
    std::uint32_t ncomp_ = 0;
    std::uint32_t split_ = 0;
    std::vector<ModTerm> terms_;
};

/// Reduced module Groebner basis of the submodule generated by gens.
/// No product criterion here: it is not valid for module S-pairs.
std::vector<ModPoly> module_groebner(const std::vector<ModPoly>& gens);

/// Full normal form of f against a basis list.
ModPoly module_reduce(const ModPoly& f, const std::vector<ModPoly>& basis);

} // namespace geoconn
