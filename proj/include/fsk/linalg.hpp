#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace fsk {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

    RatVec apply(const RatVec& v) const;
    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const;
    bool is_zero() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rational> e_;
};

struct RrefResult {
    RatMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::vector<RatVec> kernel_basis(const RatMatrix& m);
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

}  // namespace fsk
