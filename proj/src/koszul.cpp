#include "geoconn/koszul.hpp"

#include <string>

namespace geoconn {

namespace {

std::vector<Fq> tuple_coords(const KoszulClassBasis& B, const std::vector<Polynomial>& tuple,
                             const GroebnerBasis& G) {
    std::vector<Fq> v(B.total_cols, G.ctx()->field()->zero());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        auto slot = coords_in_strand(tuple[i], B.strands[i], G);
        for (std::size_t k = 0; k < slot.size(); ++k) v[B.offsets[i] + k] = slot[k];
    }
    return v;
}

Polynomial coords_to_poly(const RingPtr& ctx, const StrandBasis& B, const std::vector<Fq>& v,
                          std::size_t offset) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < B.size(); ++k)
        terms.push_back({B.monomials[k], v[offset + k]});
    return Polynomial::from_terms(ctx, std::move(terms));
}

} // namespace

KoszulClassBasis h1_degree_zero(const GroebnerBasis& Gsat, const ParameterSystem& P,
                                std::uint32_t t) {
    if (t < 1) throw value_error("Koszul exponent must be >= 1");
    const RingPtr& ctx = Gsat.ctx();
    const Field& F = *ctx->field();
    const std::size_t d = P.size();
    if (d == 0) throw value_error("empty parameter system");

    KoszulClassBasis B;
    B.t = t;
    for (std::size_t i = 0; i < d; ++i) {
        B.powered_forms.push_back(P.forms[i].pow(t));
        B.offsets.push_back(B.total_cols);
        B.strands.push_back(strand_basis(Gsat, (std::uint64_t)t * P.degrees[i]));
        B.total_cols += B.strands.back().size();
    }

    // cocycle constraints a_i f_j^t - a_j f_i^t = 0 mod I for i < j,
    // expressed on the strand bases
    std::vector<std::vector<Fq>> rows;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            StrandBasis target =
                strand_basis(Gsat, (std::uint64_t)t * (P.degrees[i] + P.degrees[j]));
            std::vector<std::vector<Fq>> block(target.size(),
                                               std::vector<Fq>(B.total_cols, F.zero()));
            for (std::size_t k = 0; k < B.strands[i].size(); ++k) {
                Polynomial prod = B.powered_forms[j].mul_term(B.strands[i].monomials[k], F.one());
                auto col = coords_in_strand(prod, target, Gsat);
                for (std::size_t r = 0; r < target.size(); ++r)
                    block[r][B.offsets[i] + k] = col[r];
            }
            for (std::size_t k = 0; k < B.strands[j].size(); ++k) {
                Polynomial prod = B.powered_forms[i].mul_term(B.strands[j].monomials[k], F.one());
                auto col = coords_in_strand(prod, target, Gsat);
                for (std::size_t r = 0; r < target.size(); ++r)
                    block[r][B.offsets[j] + k] = F.sub(block[r][B.offsets[j] + k], col[r]);
            }
            for (auto& row : block) {
                bool zero = true;
                for (const auto& e : row)
                    if (!F.is_zero(e)) {
                        zero = false;
                        break;
                    }
                if (!zero) rows.push_back(std::move(row));
            }
        }
    }

    ExactMatrix constraints(ctx->field(), rows.size(), B.total_cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < B.total_cols; ++c) constraints.set(r, c, rows[r][c]);
    std::vector<std::vector<Fq>> cocycles = constraints.nullspace_basis();

    // the single degree-0 coboundary (f_1^t, ..., f_d^t)
    B.coboundary = tuple_coords(B, B.powered_forms, Gsat);
    bool cb_zero = true;
    for (const auto& e : B.coboundary)
        if (!F.is_zero(e)) {
            cb_zero = false;
            break;
        }
    if (cb_zero) throw internal_error("coboundary vanishes; parameter is a zerodivisor");
    for (const auto& e : constraints.apply(B.coboundary))
        if (!F.is_zero(e)) throw internal_error("coboundary is not a cocycle");

    // deterministic complement: pivot the coboundary on its first nonzero
    // coordinate, project the cocycles, echelonize
    std::size_t pivot = 0;
    while (F.is_zero(B.coboundary[pivot])) ++pivot;
    Fq cb_inv = F.inv(B.coboundary[pivot]);
    std::vector<std::vector<Fq>> projected;
    for (auto& z : cocycles) {
        Fq lambda = F.mul(z[pivot], cb_inv);
        std::vector<Fq> w(B.total_cols);
        for (std::size_t c = 0; c < B.total_cols; ++c)
            w[c] = F.sub(z[c], F.mul(lambda, B.coboundary[c]));
        projected.push_back(std::move(w));
    }
    B.class_coords = row_span_basis(ctx->field(), projected, B.total_cols);
    if (cocycles.empty() || B.class_coords.size() != cocycles.size() - 1)
        throw internal_error("projection along the coboundary lost the wrong rank");

    // symbolic re-check of every emitted class
    for (const auto& coords : B.class_coords) {
        std::vector<Polynomial> tuple;
        for (std::size_t i = 0; i < d; ++i)
            tuple.push_back(coords_to_poly(ctx, B.strands[i], coords, B.offsets[i]));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                Polynomial rel = tuple[i] * B.powered_forms[j] - tuple[j] * B.powered_forms[i];
                if (!normal_form(rel, Gsat).is_zero())
                    throw internal_error("emitted class fails the cocycle relations");
            }
        B.class_tuples.push_back(std::move(tuple));
    }
    return B;
}

namespace {

// solve [class columns | coboundary] * w = v; returns the class part
std::vector<Fq> express_in_classes(const KoszulClassBasis& target, const std::vector<Fq>& v,
                                   const FieldPtr& field) {
    const std::size_t dim = target.dim();
    ExactMatrix m(field, target.total_cols, dim + 1);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t r = 0; r < target.total_cols; ++r)
            m.set(r, j, target.class_coords[j][r]);
    for (std::size_t r = 0; r < target.total_cols; ++r)
        m.set(r, dim, target.coboundary[r]);
    auto sol = m.solve(v);
    if (!sol)
        throw internal_error("comparison image misses the Koszul class span; "
                             "nonzerodivisor certificate violated upstream");
    return std::vector<Fq>(sol->begin(), sol->begin() + dim);
}

} // namespace

ExactMatrix limit_map(const GroebnerBasis& Gsat, const ParameterSystem& P,
                      const KoszulClassBasis& from, const KoszulClassBasis& to) {
    if (to.t != from.t + 1) throw value_error("limit map needs consecutive exponents");
    const FieldPtr& field = Gsat.ctx()->field();
    ExactMatrix m(field, to.dim(), from.dim());
    for (std::size_t j = 0; j < from.dim(); ++j) {
        std::vector<Polynomial> image;
        for (std::size_t i = 0; i < P.size(); ++i)
            image.push_back(from.class_tuples[j][i] * P.forms[i]);
        auto coords = tuple_coords(to, image, Gsat);
        auto w = express_in_classes(to, coords, field);
        for (std::size_t r = 0; r < to.dim(); ++r) m.set(r, j, w[r]);
    }
    return m;
}

StabilizeResult stabilize(const GroebnerBasis& Gsat, const ParameterSystem& P,
                          std::size_t ell, std::uint32_t t_max) {
    std::vector<std::size_t> dims;
    for (std::uint32_t t = 1; t <= t_max; ++t) {
        KoszulClassBasis B = h1_degree_zero(Gsat, P, t);
        dims.push_back(B.dim());
        if (B.dim() > ell)
            throw internal_error("Koszul strand exceeds the certified length");
        if (dims.size() >= 2 && dims[dims.size() - 1] < dims[dims.size() - 2])
            throw internal_error("Koszul strand dimensions decreased");
        if (B.dim() == ell) return {t, std::move(B), std::move(dims)};
    }
    std::string seq;
    for (auto d : dims) seq += (seq.empty() ? "" : ", ") + std::to_string(d);
    throw budget_error("Koszul stabilization did not reach the certified length " +
                       std::to_string(ell) + " by t = " + std::to_string(t_max) +
                       "; dimension sequence: " + seq);
}

StabilizeResult stabilize_heuristic(const GroebnerBasis& Gsat, const ParameterSystem& P,
                                    std::uint32_t t_max, std::uint32_t plateau) {
    std::vector<std::size_t> dims;
    std::vector<KoszulClassBasis> kept;
    for (std::uint32_t t = 1; t <= t_max; ++t) {
        KoszulClassBasis B = h1_degree_zero(Gsat, P, t);
        dims.push_back(B.dim());
        kept.push_back(std::move(B));
        if (dims.size() >= plateau + 1) {
            std::size_t last = dims.size() - 1;
            bool flat = true;
            for (std::uint32_t k = 0; k < plateau; ++k)
                if (dims[last - k] != dims[last - k - 1]) {
                    flat = false;
                    break;
                }
            if (flat) {
                std::uint32_t n = t - plateau;
                std::vector<std::size_t> prefix(dims.begin(), dims.begin() + n);
                return {n, std::move(kept[n - 1]), std::move(prefix)};
            }
        }
    }
    throw budget_error("heuristic stabilization found no dimension plateau by t = " +
                       std::to_string(t_max));
}

} // namespace geoconn
