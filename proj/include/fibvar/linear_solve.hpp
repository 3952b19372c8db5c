#pragma once

#include "fibvar/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fibvar {

/// Dense row-major matrix of rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> operator*(std::span<const Rational> x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/*
 * Exact solve of M x = b.
 *
 * Each row of [M | b] is scaled by the lcm of its denominators, then
 * fraction-free (Bareiss) elimination runs over the integers: every division
 * by the previous pivot is exact, so entries stay integral and bounded by
 * minors of the scaled matrix. Back substitution is done over Q.
 *
 * Throws std::invalid_argument on shape mismatch and SingularMatrixError
 * when M is singular.
 */
std::vector<Rational> solve_linear_system(const RationalMatrix& M, std::span<const Rational> b);

/// Determinant by the same elimination; the last Bareiss pivot (up to row swaps).
Rational determinant(const RationalMatrix& M);

} // namespace fibvar
