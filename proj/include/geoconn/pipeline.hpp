#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geoconn/frobenius.hpp"

namespace geoconn {

enum class Strategy { Ext, Heuristic };

struct PipelineOptions {
    Strategy strategy = Strategy::Ext;
    std::uint64_t seed = 1;
    std::uint32_t t_max = 64;
    bool verbose = false;
    bool stop_after_length = false; // `info` mode: dim, length, hsop only
};

/// One counting problem: the field, the graded ring, and generator texts.
struct ProblemSpec {
    std::uint32_t characteristic = 0;
    std::uint32_t extension = 1;
    std::vector<std::string> variables;
    std::vector<std::uint32_t> weights; // empty = all 1
    std::vector<std::string> generators;
};

/// Parses the line-oriented problem format:
///   char: 3
///   ext: 1          (optional)
///   vars: x y u v
///   weights: 1 1 1 1  (optional)
///   ideal:
///     u^2 - 2*x^2
///     ...
/// '#' starts a comment anywhere; blank lines are skipped.
ProblemSpec parse_problem_file(const std::string& text);

struct StageTiming {
    std::string name;
    std::int64_t ms = 0;
};

struct RunReport {
    std::int64_t components = 0;
    bool connected_geom = false;
    int dim_r = -1;
    std::optional<std::size_t> ell;
    std::optional<std::uint32_t> stab_n;
    std::vector<std::pair<std::string, std::uint64_t>> hsop; // form text, degree
    std::vector<std::size_t> chain;                          // image chain dims
    std::string strategy;
    bool certified = false;
    std::vector<StageTiming> timings;

    // not serialized: exposed for tests and diagnostics
    std::optional<ExactMatrix> frobenius_matrix;
    std::size_t stable_dim = 0;
};

/// End-to-end count: parse, saturate, dimension, parameter system, length
/// certificate, Koszul stabilization, Frobenius, stable part.
RunReport run_pipeline(const ProblemSpec& spec, const PipelineOptions& opts = {});

/// Combinatorial count via the minimal-primes graph; the generators must
/// be square-free monomials.
RunReport run_oracle(const ProblemSpec& spec);

} // namespace geoconn
