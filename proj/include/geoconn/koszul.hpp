#pragma once

#include <cstdint>
#include <vector>

#include "geoconn/hsop.hpp"
#include "geoconn/matrix.hpp"

namespace geoconn {

/// Basis of the degree-0 strand of H^1(f_1^t, ..., f_d^t; R) for a
/// nonzerodivisor parameter system f_1..f_d on R = A/I: classes are
/// d-tuples (a_1..a_d) of normal-form polynomials with deg a_i =
/// t*deg(f_i), satisfying a_i f_j^t = a_j f_i^t mod I for i < j, modulo
/// the single degree-0 coboundary (f_1^t, ..., f_d^t).
struct KoszulClassBasis {
    std::uint32_t t = 1;
    std::vector<Polynomial> powered_forms;       // f_i^t
    std::vector<StrandBasis> strands;            // slot i: [A/I]_{t*deg f_i}
    std::vector<std::size_t> offsets;            // slot start in coordinates
    std::size_t total_cols = 0;
    std::vector<std::vector<Fq>> class_coords;   // echelonized, deterministic
    std::vector<std::vector<Polynomial>> class_tuples;
    std::vector<Fq> coboundary;                  // coords of (f_1^t..f_d^t)

    std::size_t dim() const { return class_coords.size(); }
};

/// Computes the basis by exact linear algebra: cocycle constraints over
/// the strand bases, nullspace, quotient by the coboundary line, then a
/// symbolic re-check of every emitted class.
KoszulClassBasis h1_degree_zero(const GroebnerBasis& Gsat, const ParameterSystem& P,
                                std::uint32_t t);

/// Matrix of the comparison map [(a_i)] -> [(a_i f_i)] from the basis at
/// step t to the basis at step t+1. Injective for nonzerodivisor systems.
ExactMatrix limit_map(const GroebnerBasis& Gsat, const ParameterSystem& P,
                      const KoszulClassBasis& from, const KoszulClassBasis& to);

struct StabilizeResult {
    std::uint32_t n = 1;           // smallest t with dim = ell
    KoszulClassBasis basis;        // basis at that t
    std::vector<std::size_t> dims; // dim sequence for t = 1..n
};

/// Increments t until dim [H^1(f^t)]_0 reaches ell. Dimensions are
/// checked nondecreasing and bounded by ell; exceeding t_max raises
/// budget_error carrying the dimension sequence.
StabilizeResult stabilize(const GroebnerBasis& Gsat, const ParameterSystem& P,
                          std::size_t ell, std::uint32_t t_max);

/// Certificate-free variant: stops when the dimension is unchanged for
/// `plateau` consecutive steps and reports that dimension as the length.
StabilizeResult stabilize_heuristic(const GroebnerBasis& Gsat, const ParameterSystem& P,
                                    std::uint32_t t_max, std::uint32_t plateau = 2);

} // namespace geoconn
