#pragma once

// Exact dense linear algebra over Q using fraction-free (Bareiss) elimination.
//
// Rows are first scaled to integers; elimination then runs entirely in Z,
// where every intermediate entry is a minor of the input and each division is
// exact. Kernels are read off the resulting echelon form.

#include <cstddef>
#include <vector>

#include "crl_atlas/rational.hpp"

namespace crl_atlas {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> multiply(const std::vector<Rational>& v) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Integer row-echelon form produced by Bareiss elimination.
struct IntegerEchelon {
    std::vector<std::vector<Integer>> rows;  // only the first `rank` rows are nonzero
    std::vector<std::size_t> pivot_cols;
    std::size_t cols = 0;
    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

IntegerEchelon bareiss_echelon(const RationalMatrix& m);

std::size_t matrix_rank(const RationalMatrix& m);

/// Basis of the right kernel. Vector i has a positive entry at the i-th free
/// column, zeros at the other free columns, and is a primitive integer vector.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Determinant of a square matrix; throws std::invalid_argument otherwise.
Rational determinant(const RationalMatrix& m);

/// Scales v by a positive rational so that it becomes a primitive integer vector.
std::vector<Rational> make_primitive(std::vector<Rational> v);

}  // namespace crl_atlas
