#include "fsk/complexes.hpp"

#include "fsk/families.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace fsk {

namespace {

const Elt kZero;

void add_to(std::map<int, Rational>& acc, const Elt& v, const Rational& c = 1)
{
    for (const auto& [k, x] : v) acc[k] += c * x;
}

Elt from_map(const std::map<int, Rational>& m)
{
    Elt out;
    for (const auto& [k, x] : m)
        if (sgn(x) != 0) out.emplace_back(k, x);
    return out;
}

Elt scaled(const Elt& v, const Rational& c)
{
    Elt out;
    if (sgn(c) == 0) return out;
    for (const auto& [k, x] : v) out.emplace_back(k, x * c);
    return out;
}

Elt sum(const Elt& a, const Elt& b, const Rational& cb = 1)
{
    std::map<int, Rational> m;
    add_to(m, a);
    add_to(m, b, cb);
    return from_map(m);
}

EltMatrix zeros(std::size_t r, std::size_t c) { return EltMatrix(r, std::vector<Elt>(c)); }

// (G o F)(r, c) = sum_m G(r, m) o F(m, c)
EltMatrix compose_mat(const FDAlgebra& A, const EltMatrix& F, const EltMatrix& G, std::size_t cols)
{
    EltMatrix out = zeros(G.size(), cols);
    for (std::size_t r = 0; r < G.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            std::map<int, Rational> acc;
            for (std::size_t m = 0; m < F.size(); ++m) {
                if (F[m][c].empty() || G[r][m].empty()) continue;
                add_to(acc, compose(A, F[m][c], G[r][m]));
            }
            out[r][c] = from_map(acc);
        }
    return out;
}

bool mat_equal(const EltMatrix& a, const EltMatrix& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r].size() != b[r].size()) return false;
        for (std::size_t c = 0; c < a[r].size(); ++c)
            if (a[r][c] != b[r][c]) return false;
    }
    return true;
}

Rational idempotent_coeff(const FDAlgebra& A, int v, const Elt& e)
{
    int id = A.idempotent(v);
    for (const auto& [k, x] : e)
        if (k == id) return x;
    return 0;
}

}  // namespace

Elt compose(const FDAlgebra& A, const Elt& f, const Elt& g)
{
    std::map<int, Rational> acc;
    for (const auto& [i, x] : f)
        for (const auto& [j, y] : g) add_to(acc, A.product(i, j), x * y);
    return from_map(acc);
}

const std::vector<int>& ProjComplex::at(int p) const
{
    static const std::vector<int> none;
    if (p < lo || p > hi()) return none;
    return terms[p - lo];
}

const Elt& ProjComplex::diff(int p, int r, int c) const
{
    if (p < lo || p >= hi()) return kZero;
    return d[p - lo][r][c];
}

bool ProjComplex::empty() const
{
    for (const auto& t : terms)
        if (!t.empty()) return false;
    return true;
}

std::size_t ProjComplex::total_rank() const
{
    std::size_t s = 0;
    for (const auto& t : terms) s += t.size();
    return s;
}

void ProjComplex::check() const
{
    if (!alg) throw InvalidComplex("complex without algebra");
    const FDAlgebra& A = *alg;
    if (d.size() != terms.size()) throw InvalidComplex("differential count mismatch");
    for (int p = lo; p <= hi(); ++p) {
        const auto& src = at(p);
        const auto& dst = at(p + 1);
        const auto& m = d[p - lo];
        if (m.size() != dst.size()) throw InvalidComplex("differential row count mismatch at degree " + std::to_string(p));
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (m[r].size() != src.size()) throw InvalidComplex("differential column count mismatch");
            for (std::size_t c = 0; c < src.size(); ++c)
                for (const auto& [k, x] : m[r][c]) {
                    (void)x;
                    if (A.basis.at(k).dst != src[c] || A.basis.at(k).src != dst[r])
                        throw InvalidComplex("differential entry outside its Hom space at degree " + std::to_string(p));
                }
        }
    }
    for (int p = lo; p + 1 < hi(); ++p) {
        auto dd = compose_mat(A, d[p - lo], d[p + 1 - lo], at(p).size());
        for (const auto& row : dd)
            for (const auto& e : row)
                if (!e.empty()) throw InvalidComplex("d^2 != 0 at degree " + std::to_string(p));
    }
}

ProjComplex make_complex(std::shared_ptr<const FDAlgebra> A, int lo, std::vector<std::vector<int>> terms,
                         std::vector<EltMatrix> d)
{
    ProjComplex K;
    K.alg = std::move(A);
    K.lo = lo;
    K.terms = std::move(terms);
    K.d = std::move(d);
    K.d.resize(K.terms.size());
    for (std::size_t k = 0; k < K.terms.size(); ++k) {
        std::size_t rows = k + 1 < K.terms.size() ? K.terms[k + 1].size() : 0;
        if (K.d[k].empty()) K.d[k] = zeros(rows, K.terms[k].size());
    }
    K.check();
    return K;
}

ProjComplex stalk(std::shared_ptr<const FDAlgebra> A, int v, int degree)
{
    return make_complex(std::move(A), degree, {{v}}, {});
}

ProjComplex trim(const ProjComplex& K)
{
    int a = K.lo, b = K.hi();
    while (a <= b && K.at(a).empty()) ++a;
    while (b >= a && K.at(b).empty()) --b;
    ProjComplex T;
    T.alg = K.alg;
    if (a > b) {
        T.lo = 0;
        return T;
    }
    T.lo = a;
    for (int p = a; p <= b; ++p) {
        T.terms.push_back(K.at(p));
        if (p < b)
            T.d.push_back(K.d[p - K.lo]);
        else
            T.d.push_back(zeros(0, K.at(p).size()));
    }
    return T;
}

bool same_complex(const ProjComplex& K, const ProjComplex& L)
{
    ProjComplex a = trim(K), b = trim(L);
    if (a.empty() && b.empty()) return true;
    if (a.lo != b.lo || a.terms != b.terms) return false;
    for (std::size_t k = 0; k < a.d.size(); ++k)
        if (!mat_equal(a.d[k], b.d[k])) return false;
    return true;
}

const Elt& ComplexMorphism::entry(int p, int r, int c) const
{
    auto it = comp.find(p);
    if (it == comp.end()) return kZero;
    return it->second[r][c];
}

ComplexMorphism zero_morphism(const ProjComplex& K, const ProjComplex& L)
{
    ComplexMorphism f;
    f.src = K;
    f.dst = L;
    for (int p = std::min(K.lo, L.lo); p <= std::max(K.hi(), L.hi()); ++p)
        if (!K.at(p).empty() && !L.at(p).empty()) f.comp[p] = zeros(L.at(p).size(), K.at(p).size());
    return f;
}

ComplexMorphism identity_morphism(const ProjComplex& K)
{
    ComplexMorphism f = zero_morphism(K, K);
    for (auto& [p, m] : f.comp)
        for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = {{K.alg->idempotent(K.at(p)[i]), Rational(1)}};
    return f;
}

bool ComplexMorphism::is_chain_map() const
{
    const FDAlgebra& A = *src.alg;
    int a = std::min(src.lo, dst.lo) - 1, b = std::max(src.hi(), dst.hi()) + 1;
    for (int p = a; p <= b; ++p) {
        const auto& K0 = src.at(p);
        const auto& L1 = dst.at(p + 1);
        if (K0.empty() || L1.empty()) continue;
        EltMatrix up = zeros(dst.at(p).size(), K0.size());
        if (comp.count(p)) up = comp.at(p);
        EltMatrix up1 = zeros(L1.size(), src.at(p + 1).size());
        if (comp.count(p + 1)) up1 = comp.at(p + 1);
        EltMatrix dl = p >= dst.lo && p < dst.hi() ? dst.d[p - dst.lo] : zeros(L1.size(), dst.at(p).size());
        EltMatrix dk = p >= src.lo && p < src.hi() ? src.d[p - src.lo] : zeros(src.at(p + 1).size(), K0.size());
        auto lhs = compose_mat(A, up, dl, K0.size());
        auto rhs = compose_mat(A, dk, up1, K0.size());
        if (!mat_equal(lhs, rhs)) return false;
    }
    return true;
}

ComplexMorphism compose(const ComplexMorphism& f, const ComplexMorphism& g)
{
    ComplexMorphism h = zero_morphism(f.src, g.dst);
    const FDAlgebra& A = *f.src.alg;
    for (auto& [p, m] : h.comp) {
        auto fi = f.comp.find(p);
        auto gi = g.comp.find(p);
        if (fi == f.comp.end() || gi == g.comp.end()) continue;
        m = compose_mat(A, fi->second, gi->second, f.src.at(p).size());
    }
    return h;
}

ProjComplex shift(const ProjComplex& K, int t)
{
    ProjComplex S = K;
    S.lo = K.lo - t;
    if (t % 2 != 0)
        for (auto& m : S.d)
            for (auto& row : m)
                for (auto& e : row) e = scaled(e, -1);
    return S;
}

ProjComplex cone(const ComplexMorphism& u)
{
    if (!u.is_chain_map()) throw InvalidComplex("cone: morphism is not compatible with the differentials");
    const ProjComplex& K = u.src;
    const ProjComplex& L = u.dst;
    int a = std::min(L.lo, K.lo - 1), b = std::max(L.hi(), K.hi() - 1);
    std::vector<std::vector<int>> terms;
    for (int p = a; p <= b; ++p) {
        std::vector<int> t = L.at(p);
        for (int v : K.at(p + 1)) t.push_back(v);
        terms.push_back(t);
    }
    std::vector<EltMatrix> d;
    for (int p = a; p <= b; ++p) {
        std::size_t nl0 = L.at(p).size(), nk1 = K.at(p + 1).size();
        std::size_t nl1 = L.at(p + 1).size(), nk2 = K.at(p + 2).size();
        EltMatrix m = zeros(p < b ? nl1 + nk2 : 0, nl0 + nk1);
        if (p < b) {
            for (std::size_t r = 0; r < nl1; ++r)
                for (std::size_t c = 0; c < nl0; ++c) m[r][c] = L.diff(p, r, c);
            for (std::size_t r = 0; r < nl1; ++r)
                for (std::size_t c = 0; c < nk1; ++c) m[r][nl0 + c] = u.entry(p + 1, r, c);
            for (std::size_t r = 0; r < nk2; ++r)
                for (std::size_t c = 0; c < nk1; ++c) m[nl1 + r][nl0 + c] = scaled(K.diff(p + 1, r, c), -1);
        }
        d.push_back(m);
    }
    return make_complex(K.alg, a, terms, d);
}

std::size_t HomComplex::dim(int q) const
{
    auto it = basis.find(q);
    return it == basis.end() ? 0 : it->second.size();
}

HomComplex hom_complex(const ProjComplex& K, const ProjComplex& L)
{
    const FDAlgebra& A = *K.alg;
    HomComplex H;
    H.qlo = L.lo - K.hi();
    H.qhi = L.hi() - K.lo;
    std::map<int, std::map<std::tuple<int, int, int, int>, int>> index;
    for (int q = H.qlo - 1; q <= H.qhi + 1; ++q) {
        auto& B = H.basis[q];
        for (int p = K.lo; p <= K.hi(); ++p) {
            const auto& kt = K.at(p);
            const auto& lt = L.at(p + q);
            for (std::size_t c = 0; c < kt.size(); ++c)
                for (std::size_t r = 0; r < lt.size(); ++r)
                    for (int b : A.block(kt[c], lt[r])) {
                        index[q][{p, static_cast<int>(c), static_cast<int>(r), b}] = static_cast<int>(B.size());
                        B.push_back({p, static_cast<int>(c), static_cast<int>(r), b});
                    }
        }
    }
    for (int q = H.qlo - 1; q <= H.qhi; ++q) {
        const auto& src = H.basis[q];
        const auto& dstb = H.basis[q + 1];
        RatMatrix M(dstb.size(), src.size());
        const auto& idx = index[q + 1];
        Rational sign = (q % 2 == 0) ? 1 : -1;
        for (std::size_t col = 0; col < src.size(); ++col) {
            auto [p, c, r, b] = src[col];
            Elt phi{{b, Rational(1)}};
            // d_L o phi
            const auto& l1 = L.at(p + q + 1);
            for (std::size_t r2 = 0; r2 < l1.size(); ++r2) {
                const Elt& dl = L.diff(p + q, static_cast<int>(r2), r);
                if (dl.empty()) continue;
                for (const auto& [k, x] : compose(A, phi, dl))
                    M(idx.at({p, c, static_cast<int>(r2), k}), col) += x;
            }
            // (-1)^q phi o d_K
            const auto& k0 = K.at(p - 1);
            for (std::size_t c2 = 0; c2 < k0.size(); ++c2) {
                const Elt& dk = K.diff(p - 1, c, static_cast<int>(c2));
                if (dk.empty()) continue;
                for (const auto& [k, x] : compose(A, dk, phi))
                    M(idx.at({p - 1, static_cast<int>(c2), r, k}), col) += sign * x;
            }
        }
        H.d[q] = std::move(M);
    }
    return H;
}

std::map<int, int> ext_table(const ProjComplex& K, const ProjComplex& L)
{
    std::map<int, int> out;
    if (K.empty() || L.empty()) return out;
    HomComplex H = hom_complex(K, L);
    std::map<int, std::size_t> rk;
    for (const auto& [q, M] : H.d) rk[q] = rank(M);
    for (int q = H.qlo; q <= H.qhi; ++q) {
        long v = static_cast<long>(H.dim(q)) - static_cast<long>(rk[q]) - static_cast<long>(rk[q - 1]);
        if (v != 0) out[q] = static_cast<int>(v);
    }
    return out;
}

int ext(const ProjComplex& K, const ProjComplex& L, int t)
{
    auto tab = ext_table(K, L);
    auto it = tab.find(t);
    return it == tab.end() ? 0 : it->second;
}

ComplexMorphism cocycle_to_chain_map(const ProjComplex& K, const ProjComplex& L, const HomComplex& H, const RatVec& v)
{
    ComplexMorphism f = zero_morphism(K, L);
    const auto& B = H.basis.at(0);
    for (std::size_t i = 0; i < B.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        auto [p, c, r, b] = B[i];
        Rational s = (p % 2 == 0) ? v[i] : Rational(-v[i]);
        auto& e = f.comp.at(p)[r][c];
        e = sum(e, Elt{{b, s}});
    }
    return f;
}

RatVec chain_map_to_cocycle(const HomComplex& H, const ComplexMorphism& f)
{
    const auto& B = H.basis.at(0);
    RatVec v(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
        auto [p, c, r, b] = B[i];
        for (const auto& [k, x] : f.entry(p, r, c))
            if (k == b) v[i] = (p % 2 == 0) ? x : Rational(-x);
    }
    return v;
}

namespace {

struct Ext0Data {
    HomComplex H;
    std::vector<RatVec> boundaries;
    std::vector<RatVec> reps;
};

std::size_t rank_of(const std::vector<RatVec>& cols, std::size_t dim)
{
    if (cols.empty()) return 0;
    RatMatrix M(dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < dim; ++r) M(r, c) = cols[c][r];
    return rank(M);
}

Ext0Data ext0_data(const ProjComplex& K, const ProjComplex& L, const std::vector<RatVec>& preferred)
{
    Ext0Data D;
    D.H = hom_complex(K, L);
    std::size_t n0 = D.H.dim(0);
    if (n0 == 0) return D;
    const RatMatrix& dm1 = D.H.d.at(-1);
    for (std::size_t c = 0; c < dm1.cols(); ++c) {
        RatVec v(n0);
        bool nz = false;
        for (std::size_t r = 0; r < n0; ++r) {
            v[r] = dm1(r, c);
            if (sgn(v[r]) != 0) nz = true;
        }
        if (nz) D.boundaries.push_back(v);
    }
    std::vector<RatVec> span = D.boundaries;
    std::size_t rk = rank_of(span, n0);
    std::vector<RatVec> cands = preferred;
    for (auto& z : kernel_basis(D.H.d.at(0))) cands.push_back(z);
    for (const auto& z : cands) {
        span.push_back(z);
        std::size_t r2 = rank_of(span, n0);
        if (r2 > rk) {
            rk = r2;
            D.reps.push_back(z);
        } else {
            span.pop_back();
        }
    }
    return D;
}

// coefficients of a cocycle on the chosen representatives
RatVec class_coords(const Ext0Data& D, const RatVec& v)
{
    std::size_t n0 = D.H.dim(0);
    std::size_t nb = D.boundaries.size(), nr = D.reps.size();
    RatMatrix M(n0, nb + nr);
    for (std::size_t c = 0; c < nb; ++c)
        for (std::size_t r = 0; r < n0; ++r) M(r, c) = D.boundaries[c][r];
    for (std::size_t c = 0; c < nr; ++c)
        for (std::size_t r = 0; r < n0; ++r) M(r, nb + c) = D.reps[c][r];
    auto sol = solve(M, v);
    if (!sol) throw std::logic_error("composite is not a cocycle");
    // representatives are independent modulo boundaries, so their coordinates are determined
    return RatVec(sol->begin() + static_cast<long>(nb), sol->end());
}

}  // namespace

std::vector<ComplexMorphism> ext0_basis(const ProjComplex& K, const ProjComplex& L)
{
    std::vector<RatVec> pref;
    auto D = ext0_data(K, L, pref);
    std::vector<ComplexMorphism> out;
    for (const auto& z : D.reps) out.push_back(cocycle_to_chain_map(K, L, D.H, z));
    return out;
}

int pullback_rank(const ComplexMorphism& f, const ProjComplex& Z, int t)
{
    const FDAlgebra& A = *f.src.alg;
    HomComplex HY = hom_complex(f.dst, Z);
    HomComplex HX = hom_complex(f.src, Z);
    std::size_t nx = HX.dim(t);
    if (nx == 0 || HY.dim(t) == 0) return 0;
    std::map<std::tuple<int, int, int, int>, int> idx;
    const auto& BX = HX.basis.at(t);
    for (std::size_t i = 0; i < BX.size(); ++i) idx[{BX[i].p, BX[i].c, BX[i].r, BX[i].b}] = static_cast<int>(i);
    std::vector<RatVec> bnd;
    if (HX.d.count(t - 1)) {
        const auto& M = HX.d.at(t - 1);
        for (std::size_t c = 0; c < M.cols(); ++c) {
            RatVec v(nx);
            for (std::size_t r = 0; r < nx; ++r) v[r] = M(r, c);
            bnd.push_back(v);
        }
    }
    std::vector<RatVec> images;
    const auto& BY = HY.basis.at(t);
    for (const auto& z : kernel_basis(HY.d.at(t))) {
        RatVec img(nx);
        for (std::size_t i = 0; i < BY.size(); ++i) {
            if (sgn(z[i]) == 0) continue;
            auto [p, m, r, b] = BY[i];
            const auto& xs = f.src.at(p);
            for (std::size_t c = 0; c < xs.size(); ++c) {
                const Elt& fe = f.entry(p, m, static_cast<int>(c));
                if (fe.empty()) continue;
                for (const auto& [k, x] : compose(A, fe, Elt{{b, z[i]}})) img[idx.at({p, static_cast<int>(c), r, k})] += x;
            }
        }
        images.push_back(img);
    }
    std::size_t base = rank_of(bnd, nx);
    auto all = bnd;
    all.insert(all.end(), images.begin(), images.end());
    return static_cast<int>(rank_of(all, nx) - base);
}

ProjComplex minimize(const ProjComplex& K0)
{
    ProjComplex K = trim(K0);
    const FDAlgebra& A = *K.alg;
    for (;;) {
        bool found = false;
        int P = 0, R = 0, C = 0;
        Rational lam;
        for (int p = K.lo; p < K.hi() && !found; ++p)
            for (std::size_t r = 0; r < K.at(p + 1).size() && !found; ++r)
                for (std::size_t c = 0; c < K.at(p).size() && !found; ++c) {
                    if (K.at(p)[c] != K.at(p + 1)[r]) continue;
                    Rational x = idempotent_coeff(A, K.at(p)[c], K.diff(p, static_cast<int>(r), static_cast<int>(c)));
                    if (sgn(x) != 0) {
                        found = true;
                        P = p;
                        R = static_cast<int>(r);
                        C = static_cast<int>(c);
                        lam = x;
                    }
                }
        if (!found) break;
        ProjComplex N = K;
        int kp = P - K.lo;
        // new d^P on the remaining summands
        const auto& src = K.at(P);
        const auto& dst = K.at(P + 1);
        EltMatrix nd;
        for (std::size_t r = 0; r < dst.size(); ++r) {
            if (static_cast<int>(r) == R) continue;
            std::vector<Elt> row;
            for (std::size_t c = 0; c < src.size(); ++c) {
                if (static_cast<int>(c) == C) continue;
                Elt corr = compose(A, K.diff(P, R, static_cast<int>(c)), K.diff(P, static_cast<int>(r), C));
                row.push_back(sum(K.diff(P, static_cast<int>(r), static_cast<int>(c)), corr, Rational(-1) / lam));
            }
            nd.push_back(row);
        }
        N.d[kp] = nd;
        N.terms[kp].erase(N.terms[kp].begin() + C);
        N.terms[kp + 1].erase(N.terms[kp + 1].begin() + R);
        if (kp > 0) N.d[kp - 1].erase(N.d[kp - 1].begin() + C);
        for (auto& row : N.d[kp + 1]) row.erase(row.begin() + R);
        K = trim(N);
        if (K.terms.empty()) break;
    }
    K.check();
    return K;
}

std::optional<int> iso_up_to_shift(const ProjComplex& K, const ProjComplex& L)
{
    ProjComplex a = minimize(K), b = minimize(L);
    if (a.empty() || b.empty()) {
        if (a.empty() && b.empty()) return 0;
        return std::nullopt;
    }
    if (a.terms.size() != b.terms.size()) return std::nullopt;
    for (std::size_t k = 0; k < a.terms.size(); ++k) {
        auto x = a.terms[k], y = b.terms[k];
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return std::nullopt;
    }
    int s = b.lo - a.lo;
    ProjComplex bs = shift(b, s);
    const FDAlgebra& A = *a.alg;
    auto basis = ext0_basis(a, bs);
    if (basis.empty()) return std::nullopt;
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dist(-7, 7);
    for (int attempt = 0; attempt < 8; ++attempt) {
        ComplexMorphism f = zero_morphism(a, bs);
        for (const auto& g : basis) {
            Rational c = attempt == 0 ? Rational(1) : Rational(dist(rng));
            for (auto& [p, m] : f.comp)
                for (std::size_t r = 0; r < m.size(); ++r)
                    for (std::size_t cc = 0; cc < m[r].size(); ++cc) m[r][cc] = sum(m[r][cc], g.entry(p, r, cc), c);
        }
        bool inv = true;
        for (int p = a.lo; p <= a.hi() && inv; ++p) {
            const auto& src = a.at(p);
            const auto& dst = bs.at(p);
            RatMatrix M(dst.size(), src.size());
            for (std::size_t r = 0; r < dst.size(); ++r)
                for (std::size_t c = 0; c < src.size(); ++c)
                    if (dst[r] == src[c]) M(r, c) = idempotent_coeff(A, src[c], f.entry(p, r, c));
            if (rank(M) != src.size()) inv = false;
        }
        if (inv) return s;
    }
    return std::nullopt;
}

bool KIndex::operator<(const KIndex& o) const
{
    return std::tie(i, j, l, m) < std::tie(o.i, o.j, o.l, o.m);
}

std::string KIndex::str() const
{
    std::ostringstream os;
    os << "K" << i << "," << j << "," << l << "," << m;
    return os.str();
}

int projective_vertex(int n, int h, int k)
{
    if (h == 0 || h == k) return -1;
    if (h < 1 || h > k || k > n - 1) throw std::out_of_range("projective index out of range");
    return q_index(n, n - k, n - h);
}

void check_k_index(int n, const KIndex& x)
{
    auto fail = [&](const std::string& what) { throw IndexConstraintViolation(x.str() + " violates " + what); };
    bool odd = n % 2 == 1;
    int top = odd ? (n - 3) / 2 : (n - 2) / 2;
    int base = odd ? n - 2 : n - 1;
    if (x.l < 0) fail("0 <= l");
    if (x.l > x.i) fail("l <= i");
    if (x.i > top) fail(odd ? "i <= (n-3)/2" : "i <= (n-2)/2");
    if (x.j != base - x.i && x.j != base + 1 - x.i) fail(odd ? "j in {n-2-i, n-1-i}" : "j in {n-1-i, n-i}");
    if (x.m != base - x.l && x.m != base + 1 - x.l) fail(odd ? "m in {n-2-l, n-1-l}" : "m in {n-1-l, n-l}");
    if (x.j > x.m) fail("j <= m");
    if (x.m > n - 1) fail("m <= n-1");
    if (x.l == x.i && x.j == x.m) fail("not both l = i and j = m");
}

std::vector<KIndex> t_indices(int n)
{
    std::vector<KIndex> out;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            for (int l = 0; l <= n; ++l)
                for (int m = 0; m <= n; ++m) {
                    KIndex x{i, j, l, m};
                    try {
                        check_k_index(n, x);
                        out.push_back(x);
                    } catch (const IndexConstraintViolation&) {
                    }
                }
    return out;
}

ProjComplex k_complex(std::shared_ptr<const FDAlgebra> G, int n, const KIndex& x)
{
    check_k_index(n, x);
    int v[4] = {projective_vertex(n, x.l, x.i), projective_vertex(n, x.l, x.j), projective_vertex(n, x.i, x.m),
                projective_vertex(n, x.j, x.m)};
    std::vector<std::vector<int>> terms(4);
    for (int k = 0; k < 4; ++k)
        if (v[k] >= 0) terms[k] = {v[k]};
    std::vector<EltMatrix> d(4);
    for (int k = 0; k < 4; ++k) {
        std::size_t rows = k < 3 ? terms[k + 1].size() : 0;
        d[k] = zeros(rows, terms[k].size());
        if (k < 3 && v[k] >= 0 && v[k + 1] >= 0) {
            const auto& blk = G->block(v[k], v[k + 1]);
            if (blk.size() != 1) throw std::logic_error("expected a unique morphism in " + x.str());
            d[k][0][0] = {{blk[0], Rational(1)}};
        }
    }
    return trim(make_complex(G, -2, terms, d));
}

std::vector<ProjComplex> t_complex(std::shared_ptr<const FDAlgebra> G, int n)
{
    std::vector<ProjComplex> out;
    for (const auto& x : t_indices(n)) {
        ProjComplex K = k_complex(G, n, x);
        bool dup = false;
        for (const auto& o : out)
            if (same_complex(o, K)) dup = true;
        if (!dup) out.push_back(K);
    }
    return out;
}

namespace {

std::vector<std::pair<int, int>> k_terms(int n, const KIndex& x)
{
    std::vector<std::pair<int, int>> t = {{x.l, x.i}, {x.l, x.j}, {x.i, x.m}, {x.j, x.m}};
    std::vector<std::pair<int, int>> out;
    for (auto [h, k] : t)
        if (projective_vertex(n, h, k) >= 0) out.push_back({h, k});
    return out;
}

ComplexMorphism inclusion_from_above(const ProjComplex& K, int d, ProjComplex& sub)
{
    std::vector<std::vector<int>> terms;
    std::vector<EltMatrix> diffs;
    for (int p = d + 1; p <= K.hi(); ++p) {
        terms.push_back(K.at(p));
        diffs.push_back(p < K.hi() ? K.d[p - K.lo] : zeros(0, K.at(p).size()));
    }
    sub = make_complex(K.alg, d + 1, terms, diffs);
    ComplexMorphism f = zero_morphism(sub, K);
    for (auto& [p, m] : f.comp)
        for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = {{K.alg->idempotent(K.at(p)[i]), Rational(1)}};
    return f;
}

ComplexMorphism projection_below(const ProjComplex& K, int d, ProjComplex& quo)
{
    std::vector<std::vector<int>> terms;
    std::vector<EltMatrix> diffs;
    for (int p = K.lo; p < d; ++p) {
        terms.push_back(K.at(p));
        diffs.push_back(p + 1 < d ? K.d[p - K.lo] : zeros(0, K.at(p).size()));
    }
    quo = make_complex(K.alg, K.lo, terms, diffs);
    ComplexMorphism f = zero_morphism(K, quo);
    for (auto& [p, m] : f.comp)
        for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = {{K.alg->idempotent(K.at(p)[i]), Rational(1)}};
    return f;
}

struct PeelResult {
    ProjComplex result;
    int cones = 0;
    std::string triangle;
};

// isolates the summand of K sitting in degree d by two mapping cones
PeelResult peel(const ProjComplex& K, int d)
{
    PeelResult out;
    std::ostringstream tri;
    ProjComplex C = K;
    if (d < K.hi()) {
        ProjComplex above;
        auto iota = inclusion_from_above(K, d, above);
        C = minimize(cone(iota));
        ++out.cones;
        tri << "cone(K>" << d << " -> K)";
    }
    // C now ends in degree d with the isolated summand on top
    if (C.lo < d) {
        ProjComplex below;
        auto pi = projection_below(C, d, below);
        C = minimize(shift(cone(pi), -1));
        ++out.cones;
        if (out.cones > 1) tri << "; ";
        tri << "cone(C -> C<" << d << ")[-1]";
    }
    out.result = minimize(C);
    out.triangle = out.cones ? tri.str() : "summand";
    return out;
}

bool is_single(const ProjComplex& K, int v, int& degree)
{
    ProjComplex m = minimize(K);
    if (m.total_rank() != 1) return false;
    for (int p = m.lo; p <= m.hi(); ++p)
        if (m.at(p).size() == 1 && m.at(p)[0] == v) {
            degree = p;
            return true;
        }
    return false;
}

}  // namespace

std::vector<WitnessStep> generation_witness(std::shared_ptr<const FDAlgebra> G, int n)
{
    auto idx = t_indices(n);
    std::sort(idx.begin(), idx.end(), [](const KIndex& a, const KIndex& b) {
        return std::make_tuple(a.l, -a.m, a.i, a.j) < std::make_tuple(b.l, -b.m, b.i, b.j);
    });
    std::set<std::pair<int, int>> known;
    std::vector<WitnessStep> steps;
    std::set<std::pair<int, int>> all;
    for (int k = 2; k <= n - 1; ++k)
        for (int h = 1; h < k; ++h) all.insert({h, k});
    for (const auto& x : idx) {
        auto t = k_terms(n, x);
        if (t.size() != 1 || known.count(t[0])) continue;
        ProjComplex K = k_complex(G, n, x);
        WitnessStep s;
        s.kind = "summand";
        s.source = x;
        s.h = t[0].first;
        s.k = t[0].second;
        if (!is_single(K, projective_vertex(n, s.h, s.k), s.degree)) throw std::logic_error("summand is not a projective");
        s.triangle = "summand";
        known.insert(t[0]);
        steps.push_back(s);
    }
    bool progress = true;
    while (progress && known.size() < all.size()) {
        progress = false;
        for (const auto& x : idx) {
            auto t = k_terms(n, x);
            int unknown = 0;
            std::pair<int, int> target;
            for (auto hk : t)
                if (!known.count(hk)) {
                    ++unknown;
                    target = hk;
                }
            if (unknown != 1) continue;
            ProjComplex K = k_complex(G, n, x);
            int v = projective_vertex(n, target.first, target.second);
            int d = K.lo;
            while (K.at(d).empty() || K.at(d)[0] != v) ++d;
            auto pr = peel(K, d);
            WitnessStep s;
            s.kind = "peel";
            s.source = x;
            s.h = target.first;
            s.k = target.second;
            s.cones = pr.cones;
            s.triangle = pr.triangle;
            if (!is_single(pr.result, v, s.degree))
                throw WitnessStuck("peeling " + x.str() + " did not isolate P" + std::to_string(s.h) + "," +
                                   std::to_string(s.k));
            known.insert(target);
            steps.push_back(s);
            progress = true;
            break;
        }
    }
    for (auto hk : all)
        if (!known.count(hk))
            throw WitnessStuck("no step reaches P" + std::to_string(hk.first) + "," + std::to_string(hk.second));
    return steps;
}

VerifyReport replay_witness(std::shared_ptr<const FDAlgebra> G, int n, const std::vector<WitnessStep>& w)
{
    VerifyReport rep;
    rep.name = "generation_witness n=" + std::to_string(n);
    std::set<std::pair<int, int>> known;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& s = w[i];
        ProjComplex K = k_complex(G, n, s.source);
        auto t = k_terms(n, s.source);
        int v = projective_vertex(n, s.h, s.k);
        for (auto hk : t)
            if (hk != std::make_pair(s.h, s.k) && !known.count(hk))
                rep.fail("step " + std::to_string(i) + " uses P" + std::to_string(hk.first) + "," +
                         std::to_string(hk.second) + " before it is reached");
        ProjComplex res = K;
        if (s.kind == "peel") {
            int d = K.lo;
            while (d <= K.hi() && (K.at(d).empty() || K.at(d)[0] != v)) ++d;
            res = peel(K, d).result;
        }
        int deg = 0;
        if (!is_single(res, v, deg) || deg != s.degree)
            rep.fail("step " + std::to_string(i) + " does not reproduce P" + std::to_string(s.h) + "," + std::to_string(s.k));
        known.insert({s.h, s.k});
    }
    for (int k = 2; k <= n - 1; ++k)
        for (int h = 1; h < k; ++h)
            if (!known.count({h, k})) rep.fail("P" + std::to_string(h) + "," + std::to_string(k) + " never reached");
    return rep;
}

VerifyReport is_tilting(int n)
{
    VerifyReport rep;
    rep.name = "is_tilting n=" + std::to_string(n);
    auto G = std::make_shared<const FDAlgebra>(gamma(n));
    auto T = t_complex(G, n);
    for (std::size_t a = 0; a < T.size(); ++a)
        for (std::size_t b = 0; b < T.size(); ++b)
            for (auto [t, dim] : ext_table(T[a], T[b]))
                if (t != 0) rep.fail("Ext^" + std::to_string(t) + " between summands " + std::to_string(a) + " and " +
                                     std::to_string(b) + " has dim " + std::to_string(dim));
    try {
        auto w = generation_witness(G, n);
        rep.merge(replay_witness(G, n, w));
    } catch (const WitnessStuck& e) {
        rep.fail(e.what());
    }
    return rep;
}

FDAlgebra end_algebra(const std::vector<ProjComplex>& col, const std::vector<std::string>& names)
{
    std::size_t N = col.size();
    if (names.size() != N) throw std::invalid_argument("end_algebra: one name per object");
    std::vector<std::vector<Ext0Data>> data(N);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            for (auto [t, dim] : ext_table(col[a], col[b]))
                if (t != 0)
                    throw NotFormalCollection("Ext^" + std::to_string(t) + "(" + names[a] + ", " + names[b] +
                                              ") has dim " + std::to_string(dim));
            std::vector<RatVec> pref;
            HomComplex H = hom_complex(col[a], col[b]);
            if (a == b && H.dim(0) > 0) pref.push_back(chain_map_to_cocycle(H, identity_morphism(col[a])));
            data[a].push_back(ext0_data(col[a], col[b], pref));
        }
    std::vector<BasisElement> basis;
    std::map<std::pair<int, int>, std::vector<int>> ids;
    for (std::size_t a = 0; a < N; ++a) {
        if (data[a][a].reps.empty()) throw NotFormalCollection("object " + names[a] + " is zero");
        BasisElement e;
        e.src = e.dst = static_cast<int>(a);
        e.idempotent = true;
        e.name = "id_" + names[a];
        ids[{static_cast<int>(a), static_cast<int>(a)}].push_back(static_cast<int>(basis.size()));
        basis.push_back(e);
    }
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            std::size_t start = (a == b) ? 1 : 0;
            for (std::size_t k = start; k < data[a][b].reps.size(); ++k) {
                BasisElement e;
                e.src = static_cast<int>(a);
                e.dst = static_cast<int>(b);
                e.name = names[a] + "->" + names[b] + (k ? "#" + std::to_string(k) : "");
                ids[{static_cast<int>(a), static_cast<int>(b)}].push_back(static_cast<int>(basis.size()));
                basis.push_back(e);
            }
        }
    std::map<std::pair<int, int>, SparseVec> mult;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            if (a == b) continue;
            const auto& fab = data[a][b];
            if (fab.reps.empty()) continue;
            for (std::size_t c = 0; c < N; ++c) {
                if (b == c) continue;
                const auto& fbc = data[b][c];
                const auto& fac = data[a][c];
                if (fbc.reps.empty()) continue;
                for (std::size_t i = 0; i < fab.reps.size(); ++i)
                    for (std::size_t j = 0; j < fbc.reps.size(); ++j) {
                        auto f = cocycle_to_chain_map(col[a], col[b], fab.H, fab.reps[i]);
                        auto g = cocycle_to_chain_map(col[b], col[c], fbc.H, fbc.reps[j]);
                        auto h = compose(f, g);
                        if (fac.H.dim(0) == 0) continue;
                        RatVec coords = class_coords(fac, chain_map_to_cocycle(fac.H, h));
                        SparseVec sv;
                        const auto& target = ids.at({static_cast<int>(a), static_cast<int>(c)});
                        for (std::size_t k = 0; k < coords.size(); ++k)
                            if (sgn(coords[k]) != 0) sv.emplace_back(target.at(k), coords[k]);
                        int gi = ids.at({static_cast<int>(b), static_cast<int>(c)}).at(j);
                        int fi = ids.at({static_cast<int>(a), static_cast<int>(b)}).at(i);
                        if (!sv.empty()) mult[{gi, fi}] = sv;
                    }
            }
        }
    return make_abstract(names, basis, mult);
}

}  // namespace fsk

namespace fsk {

std::vector<int> t_to_gamma_tilde(int n)
{
    std::vector<int> out;
    bool odd = n % 2 == 1;
    int base = odd ? n - 2 : n - 1;
    for (const auto& x : t_indices(n)) {
        int ej = x.j - (base - x.i), em = x.m - (base - x.l);
        int a = 2 * x.i + 1 - ej, b = 2 * x.l + 1 - em;
        if (odd) {
            a = n - (a + 1);
            b = n - (b + 1);
        }
        out.push_back(gt_index(n, std::min(a, b), std::max(a, b)));
    }
    return out;
}

}  // namespace fsk
