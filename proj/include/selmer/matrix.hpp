#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "selmer/polynomial.hpp"

namespace selmer {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw DomainError("ragged matrix initializer");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_column(std::size_t j, const std::vector<T>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
            }
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
        return r;
    }

    Matrix pow(unsigned long e) const {
        Matrix r = identity(rows_), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    bool all_positive() const {
        return std::all_of(a_.begin(), a_.end(), [](const T& x) { return x > 0; });
    }
    bool all_nonnegative() const {
        return std::all_of(a_.begin(), a_.end(), [](const T& x) { return x >= 0; });
    }

    /// Rows of right-aligned decimal entries.
    std::string to_text() const {
        std::size_t w = 1;
        for (const auto& x : a_) w = std::max(w, to_string(x).size());
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::string s = to_string((*this)(i, j));
                os << (j ? " " : "") << std::string(w - s.size(), ' ') << s;
            }
            os << '\n';
        }
        return os.str();
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;

/// Fraction-free (Bareiss) determinant; exact for integer matrices.
inline Integer determinant(IntMatrix m) {
    if (!m.square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// det(t I - M) by Berkowitz's division-free algorithm; monic, exact over any commutative ring.
template <class T>
Polynomial<T> characteristic_polynomial(const Matrix<T>& m) {
    if (!m.square()) throw DomainError("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    // c holds det(t I - M_r) for the leading r x r block, highest degree first
    std::vector<T> c{T(1)};
    for (std::size_t r = 0; r < n; ++r) {
        // M_{r+1} = [[A, R], [C, a]] with A = M_r, a = m(r, r)
        const T& a = m(r, r);
        // Toeplitz column: 1, -a, -R C, -R A C, ..., -R A^{r-1} C
        std::vector<T> col{T(1), T(-a)};
        std::vector<T> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);  // C as a column
        for (std::size_t p = 0; p < r; ++p) {
            T s(0);
            for (std::size_t i = 0; i < r; ++i) s += m(r, i) * v[i];
            col.push_back(T(-s));
            std::vector<T> nv(r, T(0));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) nv[i] += m(i, j) * v[j];
            v = std::move(nv);
        }
        std::vector<T> next(r + 2, T(0));
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                if (i - j < col.size()) next[i] += col[i - j] * c[j];
        c = std::move(next);
    }
    std::reverse(c.begin(), c.end());
    return Polynomial<T>(std::move(c));
}

/// Second exterior power: the matrix of 2x2 minors on index pairs i < j.
/// Its eigenvalues are the products rho_i rho_j, i < j.
template <class T>
Matrix<T> exterior_square(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) idx.emplace_back(i, j);
    Matrix<T> r(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) {
            auto [i, j] = idx[a];
            auto [k, l] = idx[b];
            r(a, b) = m(i, k) * m(j, l) - m(i, l) * m(j, k);
        }
    return r;
}

/// Companion matrix of a monic polynomial.
template <class T>
Matrix<T> companion(const Polynomial<T>& p) {
    const std::size_t n = static_cast<std::size_t>(p.degree());
    if (p.degree() < 1 || p.leading() != 1) throw DomainError("companion matrix needs a monic polynomial of degree >= 1");
    Matrix<T> c(n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = T(1);
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = T(-p[i]);
    return c;
}

}  // namespace selmer
