#pragma once

#include <string>
#include <vector>

#include "selmer/matrix.hpp"
#include "selmer/point.hpp"

namespace selmer {

/// beta(k): row 0 is (0, ..., 0, k, 1), rows 1..n carry the shifted identity.
inline IntMatrix beta_matrix(const Integer& k, std::size_t n) {
    if (n < 1) throw DomainError("beta matrix needs n >= 1");
    if (k < 1) throw DomainError("beta matrix needs k >= 1");
    IntMatrix b(n + 1, n + 1);
    b(0, n - 1) = k;
    b(0, n) = 1;
    for (std::size_t i = 1; i <= n; ++i) b(i, i - 1) = 1;
    return b;
}

/// The product beta(k_1) ... beta(k_s) together with its digits.
///
/// Columns carry the cyclic labels (B^(s-n+1), ..., B^(s), B^(s-n)): column c < n holds
/// B^(s-n+1+c) and column n holds B^(s-n). Labels below 1 refer to columns of the
/// identity, B^(1-n+c) = e_c and B^(-n) = e_n.
class ConvergentState {
public:
    explicit ConvergentState(std::size_t n) : n_(n), matrix_(IntMatrix::identity(n + 1)) {
        if (n < 1) throw DomainError("convergent state needs n >= 1");
    }
    ConvergentState(std::size_t n, std::vector<Integer> digits, IntMatrix m)
        : n_(n), digits_(std::move(digits)), matrix_(std::move(m)) {}

    std::size_t dim() const { return n_; }
    std::size_t steps() const { return digits_.size(); }
    const std::vector<Integer>& digits() const { return digits_; }
    const IntMatrix& matrix() const { return matrix_; }

    /// Label t of column c, i.e. the column holds B^(t).
    long column_label(std::size_t c) const {
        const long s = static_cast<long>(steps()), n = static_cast<long>(n_);
        return c < n_ ? s - n + 1 + static_cast<long>(c) : s - n;
    }

    /// Matrix column holding B^(t), for s - n <= t <= s.
    std::size_t column_of_label(long t) const {
        const long s = static_cast<long>(steps()), n = static_cast<long>(n_);
        if (t < s - n || t > s) throw DomainError("label outside the current window");
        return t == s - n ? n_ : static_cast<std::size_t>(t - (s - n + 1));
    }

    /// B^(s), the newest convergent column.
    std::vector<Integer> latest_column() const { return matrix_.column(n_ - 1); }

    friend bool operator==(const ConvergentState&, const ConvergentState&) = default;

private:
    std::size_t n_;
    std::vector<Integer> digits_;
    IntMatrix matrix_;
};

/// Full matrix product; kept as the reference route for the recursion.
inline ConvergentState beta_product(const std::vector<Integer>& digits, std::size_t n) {
    IntMatrix m = IntMatrix::identity(n + 1);
    for (const auto& k : digits) m = m * beta_matrix(k, n);
    return ConvergentState(n, digits, std::move(m));
}

/// Appends one digit using only B^(s+1) = k B^(s-n+1) + B^(s-n).
inline ConvergentState recursion_extend(const ConvergentState& st, const Integer& k) {
    if (k < 1) throw DomainError("MSA digit must be >= 1");
    const std::size_t n = st.dim();
    const IntMatrix& m = st.matrix();
    IntMatrix next(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        // shift the window left: B^(s-n+2) .. B^(s) move down one slot
        for (std::size_t c = 0; c + 2 <= n; ++c) next(i, c) = m(i, c + 1);
        next(i, n - 1) = k * m(i, 0) + m(i, n);
        next(i, n) = m(i, 0);
    }
    std::vector<Integer> digits = st.digits();
    digits.push_back(k);
    return ConvergentState(n, std::move(digits), std::move(next));
}

/// Recovers x from y = S^s x:
/// x_i = (B_i^(s-n+1) + y_1 B_i^(s-n+2) + ... + y_{n-1} B_i^(s) + y_n B_i^(s-n)) / (same with i = 0).
inline PointB reconstruct_point(const ConvergentState& st, const PointB& y) {
    const std::size_t n = st.dim();
    if (y.dim() != n) throw DomainError("dimension mismatch in reconstruction");
    const IntMatrix& m = st.matrix();
    std::vector<Element> num;
    for (std::size_t i = 0; i <= n; ++i) {
        Element acc(y.field(), Rational(m(i, 0)));
        for (std::size_t c = 1; c <= n; ++c) acc += y[c - 1] * Rational(m(i, c));
        num.push_back(std::move(acc));
    }
    if (num[0].is_zero()) throw ZeroDivisionError("reconstruction denominator vanishes");
    Element inv = num[0].inverse();
    std::vector<Element> x;
    for (std::size_t i = 1; i <= n; ++i) x.push_back(num[i] * inv);
    return PointB(std::move(x));
}

/// (B_1/B_0, ..., B_n/B_0) for matrix column g.
inline std::vector<Rational> convergent_point(const ConvergentState& st, std::size_t g) {
    if (st.steps() == 0) throw DomainError("identity state has no convergent");
    if (g > st.dim()) throw DomainError("column index out of range");
    const IntMatrix& m = st.matrix();
    if (m(0, g) == 0) throw ZeroDivisionError("convergent column " + std::to_string(g) + " has B_0 = 0");
    std::vector<Rational> r;
    for (std::size_t i = 1; i <= st.dim(); ++i) r.push_back(make_rational(m(i, g), m(0, g)));
    return r;
}

}  // namespace selmer
