#include "fibvar/linear_solve.hpp"

#include "fibvar/errors.hpp"

#include <stdexcept>
#include <utility>

namespace fibvar {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("RationalMatrix: ragged initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i)
        I(i, i) = 1;
    return I;
}

std::vector<Rational> RationalMatrix::operator*(std::span<const Rational> x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("RationalMatrix: vector length mismatch");
    std::vector<Rational> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            y[i] += (*this)(i, j) * x[j];
    return y;
}

namespace {

using IntegerRows = std::vector<std::vector<BigInt>>;

/// Rows of [M | extra] scaled to integers; `scales` receives the factor per row.
IntegerRows integer_augmented(const RationalMatrix& M, std::span<const Rational> extra, std::vector<BigInt>& scales)
{
    const std::size_t n = M.rows();
    const std::size_t width = M.cols() + (extra.empty() ? 0 : 1);
    IntegerRows rows(n, std::vector<BigInt>(width));
    scales.assign(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        BigInt lcm = 1;
        for (std::size_t j = 0; j < M.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), M(i, j).get_den_mpz_t());
        if (!extra.empty())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), extra[i].get_den_mpz_t());
        for (std::size_t j = 0; j < M.cols(); ++j)
            rows[i][j] = M(i, j).get_num() * (lcm / M(i, j).get_den());
        if (!extra.empty())
            rows[i][M.cols()] = extra[i].get_num() * (lcm / extra[i].get_den());
        scales[i] = lcm;
    }
    return rows;
}

/// In-place Bareiss elimination on the leading n columns. Returns false if singular;
/// `swaps` counts row exchanges.
bool bareiss(IntegerRows& rows, std::size_t n, int& swaps)
{
    swaps = 0;
    BigInt previous = 1;
    const std::size_t width = rows.empty() ? 0 : rows[0].size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && rows[pivot_row][k] == 0)
            ++pivot_row;
        if (pivot_row == n)
            return false;
        if (pivot_row != k) {
            std::swap(rows[pivot_row], rows[k]);
            ++swaps;
        }
        const BigInt& pivot = rows[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < width; ++j) {
                BigInt t = rows[i][j] * pivot - rows[i][k] * rows[k][j];
                mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            rows[i][k] = 0;
        }
        previous = pivot;
    }
    return true;
}

} // namespace

std::vector<Rational> solve_linear_system(const RationalMatrix& M, std::span<const Rational> b)
{
    const std::size_t n = M.rows();
    if (M.cols() != n)
        throw std::invalid_argument("solve_linear_system: matrix is not square");
    if (b.size() != n)
        throw std::invalid_argument("solve_linear_system: right-hand side has wrong length");
    if (n == 0)
        return {};

    std::vector<BigInt> scales;
    IntegerRows rows = integer_augmented(M, b, scales);
    int swaps = 0;
    if (!bareiss(rows, n, swaps))
        throw SingularMatrixError("solve_linear_system: matrix is singular");

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational sum(rows[i][n]);
        for (std::size_t j = i + 1; j < n; ++j)
            sum -= Rational(rows[i][j]) * x[j];
        x[i] = sum / Rational(rows[i][i]);
    }
    return x;
}

Rational determinant(const RationalMatrix& M)
{
    const std::size_t n = M.rows();
    if (M.cols() != n)
        throw std::invalid_argument("determinant: matrix is not square");
    if (n == 0)
        return 1;
    std::vector<BigInt> scales;
    IntegerRows rows = integer_augmented(M, {}, scales);
    int swaps = 0;
    if (!bareiss(rows, n, swaps))
        return 0;
    Rational det(rows[n - 1][n - 1]);
    for (const BigInt& s : scales)
        det /= Rational(s);
    return swaps % 2 == 0 ? det : Rational(-det);
}

} // namespace fibvar
