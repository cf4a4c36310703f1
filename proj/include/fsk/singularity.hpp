#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace fsk {

using Complex = std::complex<double>;

// sparse polynomial in two variables, exponents (first, second)
class IntPoly2 {
public:
    using Terms = std::map<std::pair<int, int>, mpz_class>;

    IntPoly2() = default;
    static IntPoly2 constant(long c);
    static IntPoly2 monomial(long c, int a, int b);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree_first() const;
    int degree_second() const;
    mpz_class coeff(int a, int b) const;

    IntPoly2 operator+(const IntPoly2& o) const;
    IntPoly2 operator-(const IntPoly2& o) const;
    IntPoly2 operator*(const IntPoly2& o) const;
    IntPoly2 scaled(const mpz_class& c) const;
    bool operator==(const IntPoly2& o) const { return t_ == o.t_; }

    IntPoly2 d_first() const;
    IntPoly2 d_second() const;
    Complex eval(Complex a, Complex b) const;
    // p(x + y, x y)
    IntPoly2 lift() const;
    std::string str(const std::string& a = "u", const std::string& b = "v") const;

private:
    Terms t_;
    void add_term(int a, int b, const mpz_class& c);
};

IntPoly2 g_poly(int n);
bool lift_identity_check(int n);
double factorization_check(int n, double tol = 1e-9, unsigned seed = 0);

struct ToleranceAmbiguity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CriticalPointResult {
    int confirmed = 0;
    int rejected_diagonal = 0;
    int candidates = 0;
    int root_sign = -1;  // xi^(n-1) = root_sign * eps / n
    double max_confirmed_norm = 0.0;
    double min_rejected_norm = 0.0;
};

// candidates (xi_i + xi_j, xi_i xi_j) for the Morsification g_n - eps u
CriticalPointResult critical_points_check(int n, double eps = 1.0, double tol = 1e-8);
CriticalPointResult critical_points_with_sign(int n, double eps, double tol, int root_sign);

}  // namespace fsk
