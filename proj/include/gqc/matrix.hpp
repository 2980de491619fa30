#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gqc/field.hpp"

namespace gqc {

using Vector = std::vector<Elem>;

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);

    static Matrix from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols = 0);
    static Matrix identity(const Field& field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    Vector row_vector(std::size_t i) const;
    std::vector<Vector> to_rows() const;

    void append_row(std::span<const Elem> r);

    Matrix transpose() const;
    /// Entrywise conjugation x -> x^{sqrt q}.
    Matrix conjugate() const;
    Matrix operator*(const Matrix& o) const;
    bool is_zero() const;

    /// Reduced row-echelon form with zero rows dropped.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;
    /// Rows form a basis of {x : M x = 0}.
    Matrix nullspace() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

Elem dot(const Field& field, std::span<const Elem> a, std::span<const Elem> b);
int hamming_weight(std::span<const Elem> v);

/// Echelon basis supporting membership queries.
class RowSpace {
public:
    explicit RowSpace(const Matrix& m);

    std::size_t dimension() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    /// v minus its projection along the pivots; zero iff v is in the span.
    Vector reduce(std::span<const Elem> v) const;
    bool contains(std::span<const Elem> v) const;
    bool contains_all(const Matrix& m, std::size_t* witness = nullptr) const;

private:
    std::vector<std::size_t> pivots_;  // filled while basis_ is built
    Matrix basis_;
};

bool same_row_space(const Matrix& a, const Matrix& b);

}  // namespace gqc
