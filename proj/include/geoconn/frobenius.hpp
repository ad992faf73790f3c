#pragma once

#include <cstdint>
#include <vector>

#include "geoconn/koszul.hpp"

namespace geoconn {

/// p-semilinear endomorphism of F_q^dim: v -> M * v^[p] with v^[p] the
/// entrywise scalar Frobenius. Additive, and F(c v) = c^p F(v); over
/// prime fields this is an ordinary linear map.
struct SemilinearMap {
    FieldPtr field;
    std::size_t dim = 0;
    ExactMatrix matrix;

    std::vector<Fq> apply(const std::vector<Fq>& v) const;
};

/// Image chain data of a semilinear map: V (>=) F(V) (>=) F^2(V) (>=) ...
/// stabilizes within dim steps; F restricted to the stable part is
/// bijective.
struct StableDecomposition {
    std::size_t stable_dim = 0;
    std::vector<std::vector<Fq>> stable_basis; // echelonized
    std::size_t nilpotency_index = 0;          // smallest e with F^e killing the nilpotent part
    std::vector<std::size_t> image_chain_dims; // [dim, ...] until the first repeat
    bool stable_bijective = false;
};

/// The Frobenius action on the degree-0 Koszul strand, for a basis B
/// computed at t = 1 against a (possibly powered) parameter system: each
/// class tuple (a_i) maps to (a_i^p), a class for the p-th powers of the
/// forms; the column is its coordinate vector across the comparison map
/// (c_i) -> (c_i f_i^(p-1)), which is bijective in degree 0.
SemilinearMap build_frobenius(const GroebnerBasis& Gsat, const ParameterSystem& P,
                              const KoszulClassBasis& B);

StableDecomposition stable_part(const SemilinearMap& F);

/// True iff some iterate of F is zero, i.e. the image chain reaches 0.
bool is_f_torsion(const SemilinearMap& F);

/// 1 + dim of the stable part.
std::size_t component_count(const SemilinearMap& F);

} // namespace geoconn
