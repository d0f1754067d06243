#pragma once

// Exact integer and rational linear algebra. Everything is arbitrary
// precision (GMP); there is no floating point anywhere in the library.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace toricqh {

using Integer = mpz_class;
using Rat = mpq_class;  // always kept canonical: gcd(num, den) = 1, den > 0
using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rat>;

Rat make_rat(const Integer& num, const Integer& den);
std::string to_string(const Rat& r);

/// Dense row-major integer matrix with explicit shape.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMat(std::initializer_list<std::initializer_list<long>> rows);

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVec row(std::size_t r) const;
    std::vector<IntVec> row_list() const;
    IntMat transpose() const;
    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const IntMat&, const IntMat&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec row_times(const IntVec& v, const IntMat& m);  // vᵀ·m
Integer dot(const IntVec& a, const IntVec& b);
Integer content(const IntVec& v);  // gcd of entries, 0 for the zero vector
std::string to_string(const IntVec& v);
std::string to_string(const IntMat& m);

struct HermiteResult {
    IntMat h;  // row-style Hermite normal form
    IntMat u;  // unimodular, u·m = h
};

/// Row-style Hermite normal form. Nonzero rows come first; pivots are
/// positive, strictly increasing in column, and entries above a pivot lie in
/// [0, pivot).
HermiteResult hermite_normal_form(const IntMat& m);

/// Saturated basis of the left kernel {a ∈ Z^rows : aᵀ·m = 0}, returned as
/// the rows of a matrix in Hermite normal form (so the result is canonical).
IntMat kernel_lattice_basis(const IntMat& m);

/// Exact solution of m·x = b for square m; nullopt when m is singular.
std::optional<RatVec> solve_rational(const IntMat& m, const RatVec& b);

/// Exact inverse of a square matrix over Q; nullopt when singular.
std::optional<std::vector<RatVec>> inverse_rational(const IntMat& m);

/// Fraction-free (Bareiss) determinant.
Integer det(const IntMat& m);

}  // namespace toricqh
