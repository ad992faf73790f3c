#pragma once

#include <cstdint>
#include <vector>

#include "geoconn/groebner.hpp"

namespace geoconn {

/// Graded free module F = (+) A(-d_i); gen_degrees lists the d_i. The
/// printed twist of generator i is -d_i.
struct GradedFreeModule {
    std::vector<std::uint64_t> gen_degrees;

    std::size_t rank() const { return gen_degrees.size(); }
    bool operator==(const GradedFreeModule&) const = default;
};

/// Degree-0 map of graded free modules, entries row-major: rows indexed by
/// target generators, columns by source generators. Entry (i, j) is zero
/// or homogeneous of degree gen_degrees_source[j] - gen_degrees_target[i].
class GradedMap {
public:
    GradedMap(RingPtr ctx, GradedFreeModule target, GradedFreeModule source,
              std::vector<Polynomial> entries);

    const RingPtr& ctx() const { return ctx_; }
    const GradedFreeModule& target() const { return target_; }
    const GradedFreeModule& source() const { return source_; }
    std::size_t rows() const { return target_.rank(); }
    std::size_t cols() const { return source_.rank(); }
    const Polynomial& entry(std::size_t i, std::size_t j) const {
        return entries_[i * cols() + j];
    }

    /// Matrix product this o other (other maps into this map's source).
    GradedMap compose(const GradedMap& other) const;
    bool is_zero_map() const;

private:
    friend void cancel_constant_entries(GradedMap& prev, GradedMap& next);

    RingPtr ctx_;
    GradedFreeModule target_, source_;
    std::vector<Polynomial> entries_;
};

/// Generators of ker(M) as the columns of a new graded map into M's
/// source, computed from a module Groebner basis with a position
/// elimination order. M composed with the result is zero.
GradedMap syzygy_basis(const GradedMap& M);

/// Gaussian cancellation of constant entries of `next` against `prev`
/// (prev: F_k -> F_{k-1}, next: F_{k+1} -> F_k). Shrinks F_k and F_{k+1},
/// preserves exactness and the composite-zero property.
void cancel_constant_entries(GradedMap& prev, GradedMap& next);

/// Chain F_0 <- F_1 <- ... <- F_L with coker(d_1) = A/I, exact elsewhere.
/// `complete` marks a resolution whose final kernel vanished; when false
/// the chain was truncated at the requested homological degree.
class FreeResolution {
public:
    FreeResolution(RingPtr ctx, std::vector<GradedFreeModule> modules,
                   std::vector<GradedMap> differentials, bool complete)
        : ctx_(std::move(ctx)), modules_(std::move(modules)),
          diffs_(std::move(differentials)), complete_(complete) {}

    const RingPtr& ctx() const { return ctx_; }
    std::size_t length() const { return modules_.size() - 1; }
    const GradedFreeModule& module(std::size_t i) const { return modules_[i]; }
    /// d_i : F_i -> F_{i-1}, for 1 <= i <= length().
    const GradedMap& differential(std::size_t i) const { return diffs_[i - 1]; }
    bool complete() const { return complete_; }

private:
    RingPtr ctx_;
    std::vector<GradedFreeModule> modules_;
    std::vector<GradedMap> diffs_;
    bool complete_ = false;
};

/// Graded free resolution of A/I out to homological degree `length`
/// (shorter when the kernel vanishes first). Constant entries of every
/// differential are cancelled, so the result is minimal and its length is
/// bounded by the number of variables.
FreeResolution free_resolution(const Ideal& I, std::size_t length);

/// dim_K of the degree-0 strand of H^index(Hom(F_., A(-sigma))), computed
/// by exact linear algebra on the degree-0 strands of the dualized
/// differentials.
std::size_t ext_strand_length(const FreeResolution& res, std::size_t index,
                              std::uint64_t sigma);

} // namespace geoconn
