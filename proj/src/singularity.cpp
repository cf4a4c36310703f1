#include "fsk/singularity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

namespace fsk {

IntPoly2 IntPoly2::constant(long c) { return monomial(c, 0, 0); }

IntPoly2 IntPoly2::monomial(long c, int a, int b)
{
    IntPoly2 p;
    p.add_term(a, b, mpz_class(c));
    return p;
}

void IntPoly2::add_term(int a, int b, const mpz_class& c)
{
    if (c == 0) return;
    auto& x = t_[{a, b}];
    x += c;
    if (x == 0) t_.erase({a, b});
}

int IntPoly2::degree_first() const
{
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.first);
    return d;
}

int IntPoly2::degree_second() const
{
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.second);
    return d;
}

mpz_class IntPoly2::coeff(int a, int b) const
{
    auto it = t_.find({a, b});
    return it == t_.end() ? mpz_class(0) : it->second;
}

IntPoly2 IntPoly2::operator+(const IntPoly2& o) const
{
    IntPoly2 r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e.first, e.second, c);
    return r;
}

IntPoly2 IntPoly2::operator-(const IntPoly2& o) const { return *this + o.scaled(-1); }

IntPoly2 IntPoly2::operator*(const IntPoly2& o) const
{
    IntPoly2 r;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

IntPoly2 IntPoly2::scaled(const mpz_class& c) const
{
    IntPoly2 r;
    for (const auto& [e, x] : t_) r.add_term(e.first, e.second, x * c);
    return r;
}

IntPoly2 IntPoly2::d_first() const
{
    IntPoly2 r;
    for (const auto& [e, c] : t_)
        if (e.first > 0) r.add_term(e.first - 1, e.second, c * e.first);
    return r;
}

IntPoly2 IntPoly2::d_second() const
{
    IntPoly2 r;
    for (const auto& [e, c] : t_)
        if (e.second > 0) r.add_term(e.first, e.second - 1, c * e.second);
    return r;
}

Complex IntPoly2::eval(Complex a, Complex b) const
{
    Complex s = 0;
    for (const auto& [e, c] : t_) s += c.get_d() * std::pow(a, e.first) * std::pow(b, e.second);
    return s;
}

IntPoly2 IntPoly2::lift() const
{
    IntPoly2 sum = monomial(1, 1, 0) + monomial(1, 0, 1);
    IntPoly2 prod = monomial(1, 1, 1);
    int du = std::max(0, degree_first()), dv = std::max(0, degree_second());
    std::vector<IntPoly2> sp{constant(1)}, pp{constant(1)};
    for (int k = 1; k <= du; ++k) sp.push_back(sp.back() * sum);
    for (int k = 1; k <= dv; ++k) pp.push_back(pp.back() * prod);
    IntPoly2 r;
    for (const auto& [e, c] : t_) r = r + (sp[e.first] * pp[e.second]).scaled(c);
    return r;
}

std::string IntPoly2::str(const std::string& a, const std::string& b) const
{
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class m = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = e.first == 0 && e.second == 0;
        if (m != 1 || unit) os << m.get_str();
        if (e.first) os << a << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second) os << b << (e.second > 1 ? "^" + std::to_string(e.second) : "");
        first = false;
    }
    return os.str();
}

IntPoly2 g_poly(int n)
{
    if (n < 0) throw std::invalid_argument("g_poly needs n >= 0");
    std::vector<IntPoly2> g{IntPoly2::constant(1)};
    for (int m = 1; m <= n; ++m) {
        IntPoly2 p = IntPoly2::monomial(1, m, 0);
        mpz_class binom = 1;
        for (int k = 1; 2 * k <= m; ++k) {
            binom = binom * (m - k + 1) / k;
            p = p - (g[m - 2 * k] * IntPoly2::monomial(1, 0, k)).scaled(binom);
        }
        g.push_back(p);
    }
    return g[n];
}

bool lift_identity_check(int n)
{
    IntPoly2 target = IntPoly2::monomial(1, n, 0) + IntPoly2::monomial(1, 0, n);
    return g_poly(n).lift() == target;
}

double factorization_check(int n, double tol, unsigned seed)
{
    if (n < 3) throw std::invalid_argument("factorization_check needs n >= 3");
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    IntPoly2 g = g_poly(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.5, 1.5);
    double worst = 0;
    for (int s = 0; s < 20; ++s) {
        Complex u(dist(rng), dist(rng)), v(dist(rng), dist(rng));
        Complex prod = (n % 2) ? u : Complex(1);
        for (int k = 1; k <= n / 2; ++k) {
            double re = std::cos(std::numbers::pi * (2 * k - 1) / n);
            prod *= u * u - 2.0 * (1.0 + re) * v;
        }
        Complex val = g.eval(u, v);
        worst = std::max(worst, std::abs(val - prod) / std::max(1.0, std::abs(val)));
    }
    return worst;
}

CriticalPointResult critical_points_with_sign(int n, double eps, double tol, int root_sign)
{
    if (n < 3) throw std::invalid_argument("critical_points_check needs n >= 3");
    IntPoly2 g = g_poly(n);
    IntPoly2 gu = g.d_first(), gv = g.d_second();
    // roots of xi^(n-1) = root_sign * eps / n
    double r = std::pow(std::abs(eps) / n, 1.0 / (n - 1));
    double phase0 = (root_sign * eps < 0) ? std::numbers::pi : 0.0;
    std::vector<Complex> xi;
    for (int i = 0; i < n - 1; ++i) xi.push_back(std::polar(r, (phase0 + 2 * std::numbers::pi * i) / (n - 1)));
    CriticalPointResult res;
    res.root_sign = root_sign;
    res.min_rejected_norm = INFINITY;
    auto grad = [&](Complex u, Complex v) {
        Complex a = gu.eval(u, v) - eps, b = gv.eval(u, v);
        return std::sqrt(std::norm(a) + std::norm(b));
    };
    auto guard = [&](double x) {
        if (x >= tol && x <= 10 * tol)
            throw ToleranceAmbiguity("gradient norm " + std::to_string(x) + " inside the guard band; rerun with a tighter tol");
    };
    for (int i = 0; i < n - 1; ++i)
        for (int j = i; j < n - 1; ++j) {
            ++res.candidates;
            double x = grad(xi[i] + xi[j], xi[i] * xi[j]);
            guard(x);
            if (i != j && x < tol) {
                ++res.confirmed;
                res.max_confirmed_norm = std::max(res.max_confirmed_norm, x);
            }
            if (i == j && x > tol) {
                ++res.rejected_diagonal;
                res.min_rejected_norm = std::min(res.min_rejected_norm, x);
            }
        }
    return res;
}

CriticalPointResult critical_points_check(int n, double eps, double tol)
{
    auto res = critical_points_with_sign(n, eps, tol, -1);
    if (res.confirmed == 0) res = critical_points_with_sign(n, eps, tol, +1);
    return res;
}

}  // namespace fsk
