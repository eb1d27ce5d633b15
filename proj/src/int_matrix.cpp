#include "zetadyn/int_matrix.hpp"

#include "zetadyn/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <sstream>
#include <utility>

namespace zetadyn {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw Error("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), BigInt(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw Error("ragged matrix rows");
        for (long v : row)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows)
{
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw Error("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error("matrix dimension mismatch");
    IntMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("matrix dimension mismatch");
    IntMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j) + b(i, j);
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("matrix dimension mismatch");
    IntMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            r(i, j) = a(i, j) - b(i, j);
    return r;
}

IntMatrix IntMatrix::pow(long e) const
{
    if (!square())
        throw Error("power of a non-square matrix");
    IntMatrix base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    IntMatrix result = identity(rows_);
    while (n > 0) {
        if (n & 1UL)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

BigInt IntMatrix::determinant() const
{
    if (!square())
        throw Error("determinant of a non-square matrix");
    const int n = rows_;
    if (n == 0)
        return 1;
    IntMatrix m = *this;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(m(k, j), m(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
        }
        prev = m(k, k);
    }
    BigInt d = m(n - 1, n - 1);
    return sign < 0 ? BigInt(-d) : d;
}

IntMatrix IntMatrix::inverse() const
{
    if (!square())
        throw Error("inverse of a non-square matrix");
    const int n = rows_;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(2 * n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[i][j] = (*this)(i, j);
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            throw Error("matrix is singular");
        std::swap(a[col], a[pivot]);
        const Rational inv = 1 / a[col][col];
        for (auto& v : a[col])
            v *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0)
                continue;
            const Rational f = a[i][col];
            for (int j = 0; j < 2 * n; ++j)
                a[i][j] -= f * a[col][j];
        }
    }
    IntMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& v = a[i][n + j];
            if (!is_integer(v))
                throw Error("matrix is not unimodular");
            r(i, j) = v.get_num();
        }
    return r;
}

std::vector<std::vector<BigInt>> IntMatrix::to_rows() const
{
    std::vector<std::vector<BigInt>> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
    return out;
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j)
            os << (j ? "," : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix stack_rows(std::span<const IntMatrix> blocks)
{
    if (blocks.empty())
        return {};
    const int cols = blocks.front().cols();
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols)
            throw Error("stacked blocks differ in width");
        rows += b.rows();
    }
    IntMatrix r(rows, cols);
    int at = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < cols; ++j)
                r(at + i, j) = b(i, j);
        at += b.rows();
    }
    return r;
}

std::vector<BigInt> smith_invariants(IntMatrix m)
{
    const int R = m.rows();
    const int C = m.cols();
    std::vector<BigInt> diag;
    for (int t = 0; t < std::min(R, C); ++t) {
        for (;;) {
            int pr = -1, pc = -1;
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j)
                    if (m(i, j) != 0 && (pr < 0 || abs(m(i, j)) < abs(m(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr < 0)
                goto finished;
            if (pr != t)
                for (int j = 0; j < C; ++j)
                    std::swap(m(t, j), m(pr, j));
            if (pc != t)
                for (int i = 0; i < R; ++i)
                    std::swap(m(i, t), m(i, pc));
            bool clean = true;
            BigInt q;
            for (int i = t + 1; i < R; ++i) {
                if (m(i, t) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
                for (int j = t; j < C; ++j)
                    m(i, j) -= q * m(t, j);
                clean = clean && m(i, t) == 0;
            }
            for (int j = t + 1; j < C; ++j) {
                if (m(t, j) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
                for (int i = t; i < R; ++i)
                    m(i, j) -= q * m(i, t);
                clean = clean && m(t, j) == 0;
            }
            if (clean)
                break;
        }
        diag.push_back(abs(m(t, t)));
    }
finished:
    // Restore the divisibility chain: (x, y) -> (gcd, lcm) leaves the product unchanged.
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            BigInt g = gcd(diag[i], diag[j]);
            BigInt l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

std::vector<std::complex<double>> eigenvalues(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error("eigenvalues need a square matrix");
    Eigen::MatrixXd a(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            a(i, j) = m(i, j).get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
    std::vector<std::complex<double>> ev(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::stable_sort(ev.begin(), ev.end(), [](auto x, auto y) { return std::abs(x) > std::abs(y); });
    return ev;
}

} // namespace zetadyn
