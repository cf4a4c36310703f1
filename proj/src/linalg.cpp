#include "fsk/linalg.hpp"

#include <stdexcept>

namespace fsk {

Rational parse_rational(const std::string& s)
{
    Rational q(s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in " + s);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    RatMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatVec RatMatrix::apply(const RatVec& v) const
{
    if (v.size() != c_) throw std::invalid_argument("apply: size mismatch");
    RatVec out(r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (sgn(e_[i * c_ + j]) != 0 && sgn(v[j]) != 0) out[i] += e_[i * c_ + j] * v[j];
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const
{
    if (c_ != o.r_) throw std::invalid_argument("multiply: size mismatch");
    RatMatrix out(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j)
                if (sgn(o(k, j)) != 0) out(i, j) += a * o(k, j);
        }
    return out;
}

bool RatMatrix::operator==(const RatMatrix& o) const
{
    return r_ == o.r_ && c_ == o.c_ && e_ == o.e_;
}

bool RatMatrix::is_zero() const
{
    for (const auto& x : e_)
        if (sgn(x) != 0) return false;
    return true;
}

RrefResult rref(const RatMatrix& m)
{
    RrefResult res;
    res.reduced = m;
    RatMatrix& a = res.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && sgn(a(piv, col)) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
        Rational inv = 1 / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || sgn(a(i, col)) == 0) continue;
            Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (sgn(a(row, j)) != 0) a(i, j) -= f * a(row, j);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

std::vector<RatVec> kernel_basis(const RatMatrix& m)
{
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivot_cols) is_pivot[p] = true;
    std::vector<RatVec> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RatVec v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_cols[i]] = -r.reduced(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b)
{
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto r = rref(aug);
    if (!r.pivot_cols.empty() && r.pivot_cols.back() == m.cols()) return std::nullopt;
    RatVec x(m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivot_cols[i]] = r.reduced(i, m.cols());
    return x;
}

}  // namespace fsk
