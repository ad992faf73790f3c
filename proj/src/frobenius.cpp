#include "geoconn/frobenius.hpp"

namespace geoconn {

std::vector<Fq> SemilinearMap::apply(const std::vector<Fq>& v) const {
    std::vector<Fq> twisted(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) twisted[i] = field->frobenius(v[i]);
    return matrix.apply(twisted);
}

SemilinearMap build_frobenius(const GroebnerBasis& Gsat, const ParameterSystem& P,
                              const KoszulClassBasis& B) {
    const RingPtr& ctx = Gsat.ctx();
    const FieldPtr& field = ctx->field();
    const Field& F = *field;
    const std::uint32_t p = F.characteristic();
    const std::size_t ell = B.dim();
    if (B.t != 1)
        throw value_error("Frobenius needs the basis at t = 1; power the forms first");

    SemilinearMap out{field, ell, ExactMatrix(field, ell, ell)};
    if (ell == 0) return out;

    // target presentation [H^1(f^p)]_0 and the comparison images of B
    KoszulClassBasis Bp = h1_degree_zero(Gsat, P, p);
    if (Bp.dim() != ell)
        throw internal_error("comparison map is not bijective in degree 0; "
                             "stabilization certificate violated");

    const std::size_t d = P.size();
    std::vector<Polynomial> shift; // f_i^(p-1)
    for (std::size_t i = 0; i < d; ++i) shift.push_back(P.forms[i].pow(p - 1));

    // columns: phi(B_1) .. phi(B_ell), coboundary of the p-th powers
    ExactMatrix sys(field, Bp.total_cols, ell + 1);
    for (std::size_t j = 0; j < ell; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            Polynomial image = B.class_tuples[j][i] * shift[i];
            auto slot = coords_in_strand(image, Bp.strands[i], Gsat);
            for (std::size_t k = 0; k < slot.size(); ++k)
                sys.set(Bp.offsets[i] + k, j, slot[k]);
        }
    }
    for (std::size_t r = 0; r < Bp.total_cols; ++r) sys.set(r, ell, Bp.coboundary[r]);
    if (sys.rank() != ell + 1)
        throw internal_error("comparison images are dependent modulo the coboundary");

    for (std::size_t j = 0; j < ell; ++j) {
        std::vector<Fq> target(Bp.total_cols, F.zero());
        for (std::size_t i = 0; i < d; ++i) {
            Polynomial powered = B.class_tuples[j][i].pth_power();
            auto slot = coords_in_strand(powered, Bp.strands[i], Gsat);
            for (std::size_t k = 0; k < slot.size(); ++k)
                target[Bp.offsets[i] + k] = slot[k];
        }
        auto sol = sys.solve(target);
        if (!sol)
            throw internal_error("Frobenius image is outside the comparison span");
        for (std::size_t r = 0; r < ell; ++r) out.matrix.set(r, j, (*sol)[r]);
    }
    return out;
}

StableDecomposition stable_part(const SemilinearMap& Fmap) {
    const FieldPtr& field = Fmap.field;
    const std::size_t n = Fmap.dim;
    StableDecomposition out;

    std::vector<std::vector<Fq>> basis;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Fq> e(n, field->zero());
        e[i] = field->one();
        basis.push_back(std::move(e));
    }
    out.image_chain_dims.push_back(n);

    for (;;) {
        // image of the span: spans map to spans of images because the
        // scalar Frobenius is surjective on F_q
        std::vector<std::vector<Fq>> images;
        for (const auto& v : basis) images.push_back(Fmap.apply(v));
        auto next = row_span_basis(field, images, n);
        // the chain is nested, so equal dimension means equal space
        if (next.size() == basis.size()) break;
        out.image_chain_dims.push_back(next.size());
        basis = std::move(next);
        if (out.image_chain_dims.size() > n + 2)
            throw internal_error("image chain failed to stabilize");
    }

    out.stable_basis = row_span_basis(field, basis, n);
    out.stable_dim = out.stable_basis.size();
    out.nilpotency_index = out.image_chain_dims.size() - 1;

    // F restricted to the stable part must be bijective
    if (out.stable_dim == 0) {
        out.stable_bijective = true;
    } else {
        std::vector<std::vector<Fq>> images;
        for (const auto& v : out.stable_basis) images.push_back(Fmap.apply(v));
        out.stable_bijective =
            row_span_basis(field, images, n) == out.stable_basis;
    }
    if (!out.stable_bijective)
        throw internal_error("Frobenius is not bijective on the stable part");
    return out;
}

bool is_f_torsion(const SemilinearMap& F) { return stable_part(F).stable_dim == 0; }

std::size_t component_count(const SemilinearMap& F) {
    return 1 + stable_part(F).stable_dim;
}

} // namespace geoconn
