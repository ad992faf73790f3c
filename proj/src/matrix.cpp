#include "geoconn/matrix.hpp"

#include <algorithm>

namespace geoconn {

ExactMatrix ExactMatrix::identity(FieldPtr field, std::size_t n) {
    ExactMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, m.f_->one());
    return m;
}

ExactMatrix ExactMatrix::from_rows(FieldPtr field,
                                   const std::vector<std::vector<Fq>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    ExactMatrix m(std::move(field), r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw value_error("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
    return m;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw value_error("dimension mismatch in multiply");
    ExactMatrix m(f_, rows_, rhs.cols_);
    const Field& F = *f_;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Fq v = at(i, k);
            if (F.is_zero(v)) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                m.set(i, j, F.add(m.at(i, j), F.mul(v, rhs.at(k, j))));
        }
    return m;
}

std::vector<Fq> ExactMatrix::apply(const std::vector<Fq>& v) const {
    if (v.size() != cols_) throw value_error("dimension mismatch in apply");
    const Field& F = *f_;
    std::vector<Fq> out(rows_, F.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
        Fq acc = F.zero();
        for (std::size_t j = 0; j < cols_; ++j)
            acc = F.add(acc, F.mul(at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

RrefResult ExactMatrix::rref() const {
    RrefResult res{*this, {}, 0};
    ExactMatrix& m = res.matrix;
    const Field& F = *f_;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = rows_;
        for (std::size_t r = row; r < rows_; ++r) {
            if (!F.is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < cols_; ++j) {
                Fq tmp = m.at(row, j);
                m.set(row, j, m.at(pivot, j));
                m.set(pivot, j, tmp);
            }
        Fq piv_inv = F.inv(m.at(row, col));
        for (std::size_t j = col; j < cols_; ++j)
            m.set(row, j, F.mul(m.at(row, j), piv_inv));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row) continue;
            Fq factor = m.at(r, col);
            if (F.is_zero(factor)) continue;
            for (std::size_t j = col; j < cols_; ++j)
                m.set(r, j, F.sub(m.at(r, j), F.mul(factor, m.at(row, j))));
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

std::size_t ExactMatrix::rank() const { return rref().rank; }

std::optional<std::vector<Fq>> ExactMatrix::solve(const std::vector<Fq>& b) const {
    if (b.size() != rows_) throw value_error("dimension mismatch in solve");
    ExactMatrix aug(f_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_, b[i]);
    }
    RrefResult r = aug.rref();
    for (std::size_t p : r.pivot_cols)
        if (p == cols_) return std::nullopt;
    std::vector<Fq> x(cols_, f_->zero());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        x[r.pivot_cols[i]] = r.matrix.at(i, cols_);
    return x;
}

std::vector<std::vector<Fq>> ExactMatrix::nullspace_basis() const {
    RrefResult r = rref();
    const Field& F = *f_;
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : r.pivot_cols) is_pivot[p] = true;
    std::vector<std::vector<Fq>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Fq> v(cols_, F.zero());
        v[free] = F.one();
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = F.neg(r.matrix.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Fq>> row_span_basis(const FieldPtr& field,
                                            const std::vector<std::vector<Fq>>& vectors,
                                            std::size_t width) {
    ExactMatrix m(field, vectors.size(), width);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != width) throw value_error("ragged vector list");
        for (std::size_t j = 0; j < width; ++j) m.set(i, j, vectors[i][j]);
    }
    auto r = m.rref();
    std::vector<std::vector<Fq>> basis;
    for (std::size_t i = 0; i < r.rank; ++i) {
        std::vector<Fq> row(width);
        for (std::size_t j = 0; j < width; ++j) row[j] = r.matrix.at(i, j);
        basis.push_back(std::move(row));
    }
    return basis;
}

} // namespace geoconn
