#pragma once

#include <cstdint>
#include <vector>

#include "geoconn/groebner.hpp"

namespace geoconn {

/// Minimal primes of an ideal generated by square-free monomials: each is
/// a coordinate prime, returned as a sorted list of variable indices,
/// deterministic order. Rejects non-monomial or non-square-free input.
std::vector<std::vector<std::uint32_t>> minimal_primes_squarefree(const Ideal& I);

/// Connected components of the graph on the minimal primes with an edge
/// when the union of the two variable sets is not all n variables (the
/// radical of the sum is then smaller than the irrelevant ideal). For a
/// saturated square-free monomial ideal this counts the geometric
/// components of Proj.
std::size_t graph_component_count(const std::vector<std::vector<std::uint32_t>>& primes,
                                  std::size_t nvars);

} // namespace geoconn
