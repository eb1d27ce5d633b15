#pragma once

#include "zetadyn/rational.hpp"

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace zetadyn {

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    BigInt& operator()(int r, int c) { return data_[index(r, c)]; }
    const BigInt& operator()(int r, int c) const { return data_[index(r, c)]; }

    /// Integer power; negative exponents require a unimodular matrix.
    IntMatrix pow(long e) const;
    /// Exact inverse of a unimodular matrix; throws otherwise.
    IntMatrix inverse() const;
    /// Fraction-free Bareiss elimination.
    BigInt determinant() const;

    std::vector<std::vector<BigInt>> to_rows() const;
    std::string to_string() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c); }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Vertical concatenation of matrices with equal column counts.
IntMatrix stack_rows(std::span<const IntMatrix> blocks);

/// Nonzero invariant factors d_1 | d_2 | ... (positive), one per unit of rank.
std::vector<BigInt> smith_invariants(IntMatrix m);

/// Floating-point eigenvalues, sorted by decreasing modulus. Display use only.
std::vector<std::complex<double>> eigenvalues(const IntMatrix& m);

} // namespace zetadyn
