#include "geoconn/pipeline.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

#include "geoconn/oracle.hpp"
#include "geoconn/parse.hpp"
#include "geoconn/resolution.hpp"

namespace geoconn {

namespace {

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string strip(const std::string& line) {
    std::string s = line;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& s, std::size_t line_no, const char* what) {
    if (s.empty()) throw parse_error(std::string("missing ") + what, line_no);
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw parse_error(std::string("malformed ") + what + ": " + s, line_no);
        v = v * 10 + (std::uint64_t)(c - '0');
        if (v > 0xffffffffull) throw parse_error(std::string(what) + " out of range", line_no);
    }
    return v;
}

class StageClock {
public:
    explicit StageClock(std::vector<StageTiming>& out, bool verbose)
        : out_(out), verbose_(verbose) {}

    template <typename Fn>
    auto time(const std::string& name, Fn&& fn) {
        auto start = std::chrono::steady_clock::now();
        if (verbose_) std::cerr << "[geoconn] " << name << "...\n";
        auto result = fn();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        out_.push_back({name, (std::int64_t)ms});
        if (verbose_) std::cerr << "[geoconn] " << name << " done in " << ms << " ms\n";
        return result;
    }

private:
    std::vector<StageTiming>& out_;
    bool verbose_;
};

RingPtr ring_of(const ProblemSpec& spec) {
    return make_ring(make_field(spec.characteristic, spec.extension), spec.variables,
                     spec.weights);
}

std::vector<Polynomial> parse_generators(const ProblemSpec& spec, const RingPtr& ctx) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        const std::string& text = spec.generators[i];
        Polynomial f = [&] {
            try {
                return parse_polynomial(text, ctx);
            } catch (const parse_error& e) {
                throw parse_error("generator " + std::to_string(i + 1) + " (" + text +
                                      "): " + e.what(),
                                  e.position());
            }
        }();
        if (f.is_zero()) continue;
        if (!f.homogeneity().homogeneous)
            throw value_error("generator is not homogeneous for the declared weights: " +
                              text);
        gens.push_back(std::move(f));
    }
    return gens;
}

} // namespace

ProblemSpec parse_problem_file(const std::string& text) {
    ProblemSpec spec;
    bool in_ideal = false;
    bool have_char = false, have_vars = false, have_ext = false, have_weights = false;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip(raw);
        if (line.empty()) continue;
        if (in_ideal) {
            spec.generators.push_back(line);
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("expected 'key: value' before the ideal section", line_no);
        std::string key = line.substr(0, colon);
        std::string value = strip(line.substr(colon + 1));
        if (key == "char") {
            if (have_char) throw parse_error("duplicate key char", line_no);
            spec.characteristic = (std::uint32_t)parse_uint(value, line_no, "characteristic");
            have_char = true;
        } else if (key == "ext") {
            if (have_ext) throw parse_error("duplicate key ext", line_no);
            spec.extension = (std::uint32_t)parse_uint(value, line_no, "extension degree");
            if (spec.extension < 1) throw parse_error("ext must be >= 1", line_no);
            have_ext = true;
        } else if (key == "vars") {
            if (have_vars) throw parse_error("duplicate key vars", line_no);
            spec.variables = split_words(value);
            if (spec.variables.empty()) throw parse_error("vars lists no names", line_no);
            have_vars = true;
        } else if (key == "weights") {
            if (have_weights) throw parse_error("duplicate key weights", line_no);
            for (const auto& w : split_words(value))
                spec.weights.push_back((std::uint32_t)parse_uint(w, line_no, "weight"));
            have_weights = true;
        } else if (key == "ideal") {
            if (!value.empty()) throw parse_error("ideal: takes no inline value", line_no);
            in_ideal = true;
        } else {
            throw parse_error("unknown key " + key, line_no);
        }
    }
    if (!have_char) throw parse_error("missing required key char", line_no);
    if (!have_vars) throw parse_error("missing required key vars", line_no);
    if (have_weights && spec.weights.size() != spec.variables.size())
        throw parse_error("weights count differs from vars count", line_no);
    return spec;
}

RunReport run_pipeline(const ProblemSpec& spec, const PipelineOptions& opts) {
    RunReport report;
    report.strategy = opts.strategy == Strategy::Ext ? "ext" : "heuristic";
    report.certified = opts.strategy == Strategy::Ext;
    StageClock clock(report.timings, opts.verbose);

    RingPtr ctx = ring_of(spec);
    Ideal I(ctx, parse_generators(spec, ctx));

    Ideal Isat = clock.time("saturate", [&] { return saturate_irrelevant(I); });
    GroebnerBasis Gsat = buchberger(Isat);

    if (Gsat.is_unit_ideal()) {
        // the ideal is irrelevant-primary: Proj is empty
        report.components = 0;
        report.connected_geom = false;
        report.dim_r = -1;
        return report;
    }

    report.dim_r = clock.time("dimension", [&] { return krull_dimension(Gsat); });
    if (report.dim_r < 1) throw internal_error("saturated proper ideal with dim < 1");

    ParameterSystem P =
        clock.time("hsop", [&] { return find_hsop(Gsat, opts.seed); });

    StabilizeResult stab{};
    if (opts.strategy == Strategy::Ext) {
        std::size_t ell = clock.time("ext_length", [&] {
            FreeResolution res = free_resolution(Isat, ctx->nvars());
            return ext_strand_length(res, ctx->nvars() - 1, ctx->sigma());
        });
        report.ell = ell;
        if (opts.stop_after_length) {
            for (std::size_t i = 0; i < P.size(); ++i)
                report.hsop.emplace_back(P.forms[i].to_string(), P.degrees[i]);
            return report;
        }
        stab = clock.time("stabilize", [&] { return stabilize(Gsat, P, ell, opts.t_max); });
    } else {
        stab = clock.time("stabilize", [&] {
            return stabilize_heuristic(Gsat, P, opts.t_max);
        });
        report.ell = stab.basis.dim();
    }
    report.stab_n = stab.n;

    // power the parameters so that the presentation lives at t = 1
    ParameterSystem Pw = P;
    KoszulClassBasis B = std::move(stab.basis);
    if (stab.n > 1) {
        Pw = clock.time("power_hsop", [&] { return power_system(Gsat, P, stab.n); });
        B = clock.time("restabilize", [&] { return h1_degree_zero(Gsat, Pw, 1); });
        if (B.dim() != *report.ell)
            throw internal_error("powered presentation changed the strand dimension");
    }
    for (std::size_t i = 0; i < Pw.size(); ++i)
        report.hsop.emplace_back(Pw.forms[i].to_string(), Pw.degrees[i]);

    SemilinearMap F =
        clock.time("frobenius", [&] { return build_frobenius(Gsat, Pw, B); });
    StableDecomposition SD = clock.time("stable_part", [&] { return stable_part(F); });

    report.frobenius_matrix = F.matrix;
    report.stable_dim = SD.stable_dim;
    report.chain = SD.image_chain_dims;
    report.components = 1 + (std::int64_t)SD.stable_dim;
    report.connected_geom = report.components == 1;
    return report;
}

RunReport run_oracle(const ProblemSpec& spec) {
    RunReport report;
    report.strategy = "oracle";
    report.certified = true;
    StageClock clock(report.timings, false);

    RingPtr ctx = ring_of(spec);
    Ideal I(ctx, parse_generators(spec, ctx));

    auto primes = clock.time("minimal_primes", [&] { return minimal_primes_squarefree(I); });
    // combinatorial saturation: drop the irrelevant prime when present
    std::vector<std::vector<std::uint32_t>> proper;
    for (auto& P : primes)
        if (P.size() < ctx->nvars()) proper.push_back(std::move(P));

    if (proper.empty()) {
        report.components = 0;
        report.connected_geom = false;
        report.dim_r = -1;
        return report;
    }
    std::size_t min_size = proper[0].size();
    for (const auto& P : proper) min_size = std::min(min_size, P.size());
    report.dim_r = (int)(ctx->nvars() - min_size);
    report.components =
        (std::int64_t)graph_component_count(proper, ctx->nvars());
    report.connected_geom = report.components == 1;
    return report;
}

} // namespace geoconn
