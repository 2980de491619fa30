#include "gqc/matrix.hpp"

#include <algorithm>

#include "gqc/error.hpp"

namespace gqc {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) {
            if (!field.contains(rows[i][j])) throw Error(ErrorKind::InvalidArgument, "matrix entry outside the field");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vector Matrix::row_vector(std::size_t i) const {
    auto r = row(i);
    return Vector(r.begin(), r.end());
}

std::vector<Vector> Matrix::to_rows() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
    return out;
}

void Matrix::append_row(std::span<const Elem> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "appended row has wrong length");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::conjugate() const {
    Matrix c = *this;
    for (auto& v : c.data_) v = field_.conjugate(v);
    return c;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorKind::ShapeMismatch, "matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
        }
    }
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem v) { return v == 0; });
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    Matrix m = *this;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && m.at(sel, c) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
        const Elem inv = field_.inv(m.at(r, c));
        for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = field_.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Elem factor = field_.neg(m.at(i, c));
            for (std::size_t j = c; j < cols_; ++j)
                if (m.at(r, j) != 0) m.at(i, j) = field_.add(m.at(i, j), field_.mul(factor, m.at(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    m.rows_ = r;
    m.data_.resize(r * cols_);
    if (pivots) *pivots = std::move(piv);
    return m;
}

std::size_t Matrix::rank() const { return rref().rows(); }

Matrix Matrix::nullspace() const {
    std::vector<std::size_t> piv;
    const Matrix red = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    Matrix basis(field_, 0, cols_);
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vector x(cols_, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = field_.neg(red.at(i, f));
        basis.append_row(x);
    }
    return basis;
}

Elem dot(const Field& field, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "dot product of unequal lengths");
    Elem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s = field.add(s, field.mul(a[i], b[i]));
    return s;
}

int hamming_weight(std::span<const Elem> v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

RowSpace::RowSpace(const Matrix& m) : basis_(m.rref(&pivots_)) {}

Vector RowSpace::reduce(std::span<const Elem> v) const {
    if (v.size() != basis_.cols()) throw Error(ErrorKind::ShapeMismatch, "vector length does not match row space");
    const Field& f = basis_.field();
    Vector r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Elem c = r[pivots_[i]];
        if (c == 0) continue;
        const Elem factor = f.neg(c);
        for (std::size_t j = 0; j < r.size(); ++j)
            if (basis_.at(i, j) != 0) r[j] = f.add(r[j], f.mul(factor, basis_.at(i, j)));
    }
    return r;
}

bool RowSpace::contains(std::span<const Elem> v) const {
    const Vector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

bool RowSpace::contains_all(const Matrix& m, std::size_t* witness) const {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!contains(m.row(i))) {
            if (witness) *witness = i;
            return false;
        }
    }
    return true;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    return a.rref() == b.rref();
}

}  // namespace gqc
