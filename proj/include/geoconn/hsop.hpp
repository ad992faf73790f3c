#pragma once

#include <cstdint>
#include <vector>

#include "geoconn/groebner.hpp"

namespace geoconn {

/// Homogeneous system of parameters for R = A/I with every form a
/// nonzerodivisor on R, plus the certificates re-verified after the
/// search: (I : f_i) = I for each i, and dim A/(I + (f_1..f_k)) = d - k
/// for every prefix.
struct ParameterSystem {
    std::vector<Polynomial> forms;
    std::vector<std::uint64_t> degrees;
    std::vector<int> prefix_dimensions; // dim after adding each form

    std::size_t size() const { return forms.size(); }
};

struct HsopOptions {
    std::uint32_t max_degree = 4;
    std::uint32_t trials_per_degree = 200;
};

/// True iff (I : f) = I, by reduced-basis equality. Gsat must be the
/// reduced basis of the saturated ideal.
bool certify_nonzerodivisor(const GroebnerBasis& Gsat, const Polynomial& f);

/// Probabilistic search with deterministic verification: seeded draws of
/// coefficient vectors over the degree-m strand of A, m escalating from 1
/// to max_degree. Deterministic given (input, seed). Throws budget_error
/// when the trial budget runs out.
ParameterSystem find_hsop(const GroebnerBasis& Gsat, std::uint64_t seed,
                          const HsopOptions& opts = {});

/// The system with every form raised to the N-th power; certificates are
/// re-verified.
ParameterSystem power_system(const GroebnerBasis& Gsat, const ParameterSystem& P,
                             std::uint32_t N);

} // namespace geoconn
