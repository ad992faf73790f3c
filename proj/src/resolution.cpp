#include "geoconn/resolution.hpp"

#include <algorithm>

#include "geoconn/matrix.hpp"
#include "geoconn/module_gb.hpp"

namespace geoconn {

GradedMap::GradedMap(RingPtr ctx, GradedFreeModule target, GradedFreeModule source,
                     std::vector<Polynomial> entries)
    : ctx_(std::move(ctx)), target_(std::move(target)), source_(std::move(source)),
      entries_(std::move(entries)) {
    if (entries_.size() != target_.rank() * source_.rank())
        throw value_error("graded map entry count mismatch");
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
            const Polynomial& e = entry(i, j);
            if (e.is_zero()) continue;
            auto h = e.homogeneity();
            if (!h.homogeneous)
                throw value_error("graded map entry is not homogeneous");
            if (source_.gen_degrees[j] < target_.gen_degrees[i] ||
                *h.degree != source_.gen_degrees[j] - target_.gen_degrees[i])
                throw value_error("graded map entry has the wrong degree");
        }
    }
}

GradedMap GradedMap::compose(const GradedMap& other) const {
    if (!(source_ == other.target_)) throw value_error("compose shape mismatch");
    std::vector<Polynomial> out;
    out.reserve(rows() * other.cols());
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < other.cols(); ++j) {
            Polynomial acc = Polynomial::zero(ctx_);
            for (std::size_t k = 0; k < cols(); ++k)
                acc = acc + entry(i, k) * other.entry(k, j);
            out.push_back(std::move(acc));
        }
    }
    return GradedMap(ctx_, target_, other.source_, std::move(out));
}

bool GradedMap::is_zero_map() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

GradedMap syzygy_basis(const GradedMap& M) {
    const RingPtr& ctx = M.ctx();
    const std::uint32_t r = (std::uint32_t)M.rows();
    const std::uint32_t s = (std::uint32_t)M.cols();
    const std::uint32_t total = r + s;

    if (s == 0)
        return GradedMap(ctx, M.source(), GradedFreeModule{}, {});

    // graph trick: generators (column_j, e_j) in A^r (+) A^s with the
    // first block eliminated; basis elements inside the trailing block
    // generate the syzygy module
    std::vector<ModPoly> gens;
    for (std::uint32_t j = 0; j < s; ++j) {
        std::vector<ModTerm> terms;
        for (std::uint32_t i = 0; i < r; ++i)
            for (const auto& t : M.entry(i, j).terms()) terms.push_back({i, t.mono, t.coeff});
        terms.push_back({r + j, Monomial::one(ctx->nvars()), ctx->field()->one()});
        gens.push_back(ModPoly::from_terms(ctx, total, r, std::move(terms)));
    }
    std::vector<ModPoly> gb = module_groebner(gens);

    std::vector<std::vector<Polynomial>> columns; // syzygy columns, entries in A^s
    std::vector<std::uint64_t> degrees;
    for (const auto& g : gb) {
        if (!g.in_trailing_block()) continue;
        std::vector<std::vector<Term>> comp_terms(s);
        for (const auto& t : g.terms()) comp_terms[t.comp - r].push_back({t.mono, t.coeff});
        std::vector<Polynomial> col;
        col.reserve(s);
        for (std::uint32_t c = 0; c < s; ++c)
            col.push_back(Polynomial::from_terms(ctx, std::move(comp_terms[c])));
        // homogeneous column degree: entry degree plus source generator degree
        std::uint64_t deg = 0;
        bool found = false;
        for (std::uint32_t c = 0; c < s; ++c) {
            if (col[c].is_zero()) continue;
            auto h = col[c].homogeneity();
            if (!h.homogeneous) throw internal_error("inhomogeneous syzygy column");
            std::uint64_t d = *h.degree + M.source().gen_degrees[c];
            if (found && d != deg) throw internal_error("syzygy column degree mismatch");
            deg = d;
            found = true;
        }
        if (!found) continue; // zero column
        columns.push_back(std::move(col));
        degrees.push_back(deg);
    }

    // deterministic column order: by degree, then entry-wise text
    std::vector<std::size_t> order(columns.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return degrees[a] < degrees[b]; });

    GradedFreeModule source;
    std::vector<Polynomial> entries;
    for (std::size_t idx : order) source.gen_degrees.push_back(degrees[idx]);
    for (std::uint32_t i = 0; i < s; ++i)
        for (std::size_t idx : order) entries.push_back(columns[idx][i]);
    return GradedMap(ctx, M.source(), std::move(source), std::move(entries));
}

void cancel_constant_entries(GradedMap& prev, GradedMap& next) {
    if (!(prev.source_ == next.target_)) throw value_error("cancel shape mismatch");
    const RingPtr& ctx = next.ctx_;
    const Field& F = *ctx->field();

    for (;;) {
        std::size_t rows = next.rows(), cols = next.cols();
        std::size_t ci = rows, cj = cols;
        for (std::size_t i = 0; i < rows && ci == rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                const Polynomial& e = next.entry(i, j);
                if (!e.is_zero() && e.leading_monomial().is_one()) {
                    ci = i;
                    cj = j;
                    break;
                }
            }
        }
        if (ci == rows) return;

        Fq c = next.entry(ci, cj).leading_coeff();
        // column operations clear row ci, then row ci and column cj drop
        std::vector<Polynomial> shrunk;
        shrunk.reserve((rows - 1) * (cols - 1));
        std::vector<Polynomial> col_factors;
        for (std::size_t j = 0; j < cols; ++j)
            col_factors.push_back(next.entry(ci, j).scaled(F.inv(c)));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == ci) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == cj) continue;
                shrunk.push_back(next.entry(i, j) - col_factors[j] * next.entry(i, cj));
            }
        }
        GradedFreeModule new_target, new_source;
        for (std::size_t i = 0; i < rows; ++i)
            if (i != ci) new_target.gen_degrees.push_back(next.target_.gen_degrees[i]);
        for (std::size_t j = 0; j < cols; ++j)
            if (j != cj) new_source.gen_degrees.push_back(next.source_.gen_degrees[j]);

        // drop the column of `prev` for the removed generator of F_k
        std::vector<Polynomial> prev_entries;
        prev_entries.reserve(prev.rows() * (prev.cols() - 1));
        for (std::size_t i = 0; i < prev.rows(); ++i)
            for (std::size_t j = 0; j < prev.cols(); ++j)
                if (j != ci) prev_entries.push_back(prev.entry(i, j));
        GradedFreeModule prev_source = new_target;

        prev = GradedMap(ctx, prev.target_, prev_source, std::move(prev_entries));
        next = GradedMap(ctx, new_target, new_source, std::move(shrunk));
    }
}

FreeResolution free_resolution(const Ideal& I, std::size_t length) {
    const RingPtr& ctx = I.ctx();
    GroebnerBasis G = buchberger(I);
    if (G.is_unit_ideal()) throw value_error("cannot resolve the unit ideal quotient");

    std::vector<GradedFreeModule> modules{GradedFreeModule{{0}}};
    std::vector<GradedMap> diffs;

    if (G.is_zero_ideal())
        return FreeResolution(ctx, std::move(modules), std::move(diffs), true);

    GradedFreeModule f1;
    std::vector<Polynomial> row;
    for (const auto& g : G.elements()) {
        f1.gen_degrees.push_back(*g.homogeneity().degree);
        row.push_back(g);
    }
    diffs.emplace_back(ctx, modules[0], f1, std::move(row));
    modules.push_back(f1);

    bool complete = false;
    std::size_t k = 1;
    while (k < length) {
        GradedMap syz = syzygy_basis(diffs[k - 1]);
        cancel_constant_entries(diffs[k - 1], syz);
        modules[k] = diffs[k - 1].source();
        if (syz.source().rank() == 0) {
            complete = true;
            break;
        }
        modules.push_back(syz.source());
        diffs.push_back(std::move(syz));
        ++k;
    }
    return FreeResolution(ctx, std::move(modules), std::move(diffs), complete);
}

namespace {

struct StrandSpace {
    // per generator, the monomial basis of A_{gen_degree - sigma}
    std::vector<std::vector<Monomial>> slots;
    std::vector<std::size_t> offsets;
    std::size_t dim = 0;
};

StrandSpace hom_strand(const RingPtr& ctx, const GradedFreeModule& F, std::uint64_t sigma) {
    StrandSpace s;
    for (auto d : F.gen_degrees) {
        s.offsets.push_back(s.dim);
        std::vector<Monomial> mons;
        if (d >= sigma) mons = monomials_of_degree(ctx, d - sigma);
        s.dim += mons.size();
        s.slots.push_back(std::move(mons));
    }
    return s;
}

// matrix of Hom(d, A(-sigma)) on degree-0 strands: maps the strand of
// Hom(F_{i-1}) to the strand of Hom(F_i); the entry action is
// psi |-> psi o d, i.e. multiplication by the transposed entries.
ExactMatrix hom_strand_matrix(const GradedMap& d, const StrandSpace& from,
                              const StrandSpace& to) {
    const RingPtr& ctx = d.ctx();
    const Field& F = *ctx->field();
    ExactMatrix m(ctx->field(), to.dim, from.dim);
    for (std::size_t a = 0; a < d.rows(); ++a) {       // generator of F_{i-1}
        for (std::size_t b = 0; b < d.cols(); ++b) {   // generator of F_i
            const Polynomial& e = d.entry(a, b);
            if (e.is_zero()) continue;
            for (std::size_t col = 0; col < from.slots[a].size(); ++col) {
                const Monomial& mu = from.slots[a][col];
                for (const auto& t : e.terms()) {
                    Monomial target = t.mono.mul(mu);
                    // locate in slot b of `to`
                    const auto& mons = to.slots[b];
                    for (std::size_t row = 0; row < mons.size(); ++row) {
                        if (mons[row] == target) {
                            std::size_t r = to.offsets[b] + row;
                            std::size_t c = from.offsets[a] + col;
                            m.set(r, c, F.add(m.at(r, c), t.coeff));
                            break;
                        }
                    }
                }
            }
        }
    }
    return m;
}

} // namespace

std::size_t ext_strand_length(const FreeResolution& res, std::size_t index,
                              std::uint64_t sigma) {
    const std::size_t L = res.length();
    if (!res.complete() && L < index + 1)
        throw value_error("resolution too short for the requested Ext index");
    if (index > L) return 0;
    const RingPtr& ctx = res.ctx();

    StrandSpace c_idx = hom_strand(ctx, res.module(index), sigma);
    std::size_t rank_out = 0;
    if (index + 1 <= L) {
        StrandSpace c_next = hom_strand(ctx, res.module(index + 1), sigma);
        rank_out = hom_strand_matrix(res.differential(index + 1), c_idx, c_next).rank();
    }
    std::size_t rank_in = 0;
    if (index >= 1) {
        StrandSpace c_prev = hom_strand(ctx, res.module(index - 1), sigma);
        rank_in = hom_strand_matrix(res.differential(index), c_prev, c_idx).rank();
    }
    std::size_t kernel = c_idx.dim - rank_out;
    if (rank_in > kernel) throw internal_error("image exceeds kernel in Ext strand");
    return kernel - rank_in;
}

} // namespace geoconn
