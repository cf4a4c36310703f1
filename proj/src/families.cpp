#include "fsk/families.hpp"

#include <stdexcept>

namespace fsk {

std::string gt_label(int I, int J) { return "L" + std::to_string(I) + "," + std::to_string(J); }
std::string q_label(int i, int j) { return "Q" + std::to_string(i) + "," + std::to_string(j); }

int gt_index(int n, int I, int J)
{
    if (I < 1 || I >= J || J > n - 1) throw std::out_of_range("gt_index");
    return (J - 2) * (J - 1) / 2 + (I - 1);
}

int q_index(int n, int i, int j) { return gt_index(n, i, j); }

namespace {

Path arrow_path(const Quiver& q, std::initializer_list<int> arrows)
{
    Path p;
    p.src = q.arrows.at(*arrows.begin()).src;
    p.dst = q.arrows.at(*(arrows.end() - 1)).dst;
    p.arrows = arrows;
    return p;
}

int find_arrow(const Quiver& q, int s, int t)
{
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].src == s && q.arrows[a].dst == t) return static_cast<int>(a);
    return -1;
}

int parity_type(int I, int J)
{
    if (I % 2 == 1 && J % 2 == 1) return 0;
    if (I % 2 == 0 && J % 2 == 0) return 2;
    return 1;
}

}  // namespace

FDAlgebra gamma_tilde(int n)
{
    if (n < 3) throw std::invalid_argument("gamma_tilde needs n >= 3");
    Quiver q;
    Grid grid;
    for (int J = 2; J <= n - 1; ++J)
        for (int I = 1; I < J; ++I) {
            int v = q.add_vertex(gt_label(I, J));
            grid[v] = {J - 2, I - 1};
        }
    auto valid = [&](int I, int J) { return I >= 1 && I < J && J <= n - 1; };
    const int dI[4] = {1, -1, 0, 0}, dJ[4] = {0, 0, 1, -1};
    for (int J = 2; J <= n - 1; ++J)
        for (int I = 1; I < J; ++I) {
            int t = parity_type(I, J);
            if (t == 2) continue;
            for (int k = 0; k < 4; ++k) {
                int I2 = I + dI[k], J2 = J + dJ[k];
                if (!valid(I2, J2)) continue;
                int t2 = parity_type(I2, J2);
                if ((t == 0 && t2 == 1) || (t == 1 && t2 == 2))
                    q.add_arrow(gt_index(n, I, J), gt_index(n, I2, J2), gt_label(I, J) + ">" + gt_label(I2, J2));
            }
        }
    std::vector<Relation> rels;
    for (int J = 2; J <= n - 1; ++J)
        for (int I = 1; I < J; ++I) {
            if (parity_type(I, J) != 0) continue;
            for (int sI : {-1, 1})
                for (int sJ : {-1, 1}) {
                    int zI = I + sI, zJ = J + sJ;
                    if (!valid(zI, zJ) || !valid(zI, J) || !valid(I, zJ)) continue;
                    int x = gt_index(n, I, J), z = gt_index(n, zI, zJ);
                    int y1 = gt_index(n, zI, J), y2 = gt_index(n, I, zJ);
                    Relation r;
                    r.terms.emplace_back(1, arrow_path(q, {find_arrow(q, x, y1), find_arrow(q, y1, z)}));
                    r.terms.emplace_back(-1, arrow_path(q, {find_arrow(q, x, y2), find_arrow(q, y2, z)}));
                    rels.push_back(r);
                }
        }
    FDAlgebra A = build_algebra(q, rels);
    A.grid = grid;
    return A;
}

FDAlgebra gamma(int n)
{
    if (n < 3) throw std::invalid_argument("gamma needs n >= 3");
    Quiver q;
    Grid grid;
    for (int j = 2; j <= n - 1; ++j)
        for (int i = 1; i < j; ++i) {
            int v = q.add_vertex(q_label(i, j));
            grid[v] = {j, i};
        }
    for (int j = 2; j <= n - 1; ++j)
        for (int i = 1; i < j; ++i) {
            if (j + 1 <= n - 1) q.add_arrow(q_index(n, i, j), q_index(n, i, j + 1), q_label(i, j) + ">" + q_label(i, j + 1));
            if (i + 1 < j) q.add_arrow(q_index(n, i, j), q_index(n, i + 1, j), q_label(i, j) + ">" + q_label(i + 1, j));
        }
    std::vector<Relation> rels;
    for (int j = 2; j + 1 <= n - 1; ++j)
        for (int i = 1; i < j; ++i) {
            int x = q_index(n, i, j), up = q_index(n, i, j + 1), z = q_index(n, i + 1, j + 1);
            Relation r;
            if (i + 1 < j) {
                int right = q_index(n, i + 1, j);
                r.terms.emplace_back(1, arrow_path(q, {find_arrow(q, x, up), find_arrow(q, up, z)}));
                r.terms.emplace_back(-1, arrow_path(q, {find_arrow(q, x, right), find_arrow(q, right, z)}));
            } else {
                r.terms.emplace_back(1, arrow_path(q, {find_arrow(q, x, up), find_arrow(q, up, z)}));
            }
            rels.push_back(r);
        }
    FDAlgebra A = build_algebra(q, rels);
    A.grid = grid;
    return A;
}

Quiver a_quiver(int m, Orientation o)
{
    if (m < 1) throw std::invalid_argument("a_quiver needs m >= 1");
    Quiver q;
    for (int v = 1; v <= m; ++v) q.add_vertex(std::to_string(v));
    for (int v = 1; v < m; ++v) {
        bool forward = o == Orientation::linear || v % 2 == 1;
        if (forward)
            q.add_arrow(v - 1, v, "a" + std::to_string(v));
        else
            q.add_arrow(v, v - 1, "a" + std::to_string(v));
    }
    return q;
}

std::vector<IntervalModule> interval_modules(int m)
{
    if (m < 1) throw std::invalid_argument("interval_modules needs m >= 1");
    std::vector<IntervalModule> out;
    for (int a = 1; a <= m; ++a)
        for (int b = a; b <= m; ++b) out.push_back({m, a, b});
    return out;
}

std::vector<RatVec> hom_interval_basis(const IntervalModule& X, const IntervalModule& Y)
{
    if (X.m != Y.m) throw std::invalid_argument("intervals over different quivers");
    int m = X.m;
    auto in = [](const IntervalModule& M, int v) { return M.a <= v && v <= M.b; };
    // unknown f_v for every vertex supported on both sides
    std::vector<int> var(m + 1, -1);
    int nvar = 0;
    for (int v = 1; v <= m; ++v)
        if (in(X, v) && in(Y, v)) var[v] = nvar++;
    if (nvar == 0) return {};
    // linear orientation v -> v+1: Y(v->v+1) f_v = f_{v+1} X(v->v+1)
    std::vector<std::vector<Rational>> eqs;
    for (int v = 1; v < m; ++v) {
        std::vector<Rational> row(nvar);
        bool any = false;
        if (var[v] >= 0 && in(Y, v + 1)) {
            row[var[v]] += 1;
            any = true;
        }
        if (var[v + 1] >= 0 && in(X, v)) {
            row[var[v + 1]] -= 1;
            any = true;
        }
        if (any) eqs.push_back(row);
    }
    RatMatrix M(eqs.size(), nvar);
    for (std::size_t r = 0; r < eqs.size(); ++r)
        for (int c = 0; c < nvar; ++c) M(r, c) = eqs[r][c];
    std::vector<RatVec> out;
    for (const auto& k : kernel_basis(M)) {
        RatVec f(m + 1);
        for (int v = 1; v <= m; ++v)
            if (var[v] >= 0) f[v] = k[var[v]];
        out.push_back(f);
    }
    return out;
}

int hom_intervals(const IntervalModule& X, const IntervalModule& Y)
{
    return static_cast<int>(hom_interval_basis(X, Y).size());
}

FDAlgebra auslander_oracle(int m)
{
    auto mods = interval_modules(m);
    std::vector<std::string> names;
    for (const auto& M : mods) names.push_back("[" + std::to_string(M.a) + "," + std::to_string(M.b) + "]");
    std::vector<BasisElement> basis;
    std::vector<RatVec> maps;
    for (std::size_t x = 0; x < mods.size(); ++x) {
        BasisElement e;
        e.src = e.dst = static_cast<int>(x);
        e.idempotent = true;
        e.name = "id" + names[x];
        basis.push_back(e);
        RatVec id(m + 1);
        for (int v = mods[x].a; v <= mods[x].b; ++v) id[v] = 1;
        maps.push_back(id);
    }
    std::map<std::pair<int, int>, std::vector<int>> hom_of;
    for (std::size_t x = 0; x < mods.size(); ++x) hom_of[{static_cast<int>(x), static_cast<int>(x)}] = {static_cast<int>(x)};
    for (std::size_t x = 0; x < mods.size(); ++x)
        for (std::size_t y = 0; y < mods.size(); ++y) {
            if (x == y) continue;
            int k = 0;
            for (const auto& f : hom_interval_basis(mods[x], mods[y])) {
                BasisElement e;
                e.src = static_cast<int>(x);
                e.dst = static_cast<int>(y);
                e.name = "f" + names[x] + names[y] + (k ? "#" + std::to_string(k) : "");
                hom_of[{static_cast<int>(x), static_cast<int>(y)}].push_back(static_cast<int>(basis.size()));
                basis.push_back(e);
                maps.push_back(f);
                ++k;
            }
        }
    std::map<std::pair<int, int>, SparseVec> mult;
    for (std::size_t g = 0; g < basis.size(); ++g)
        for (std::size_t f = 0; f < basis.size(); ++f) {
            if (basis[f].dst != basis[g].src) continue;
            if (basis[f].idempotent || basis[g].idempotent) continue;
            int x = basis[f].src, z = basis[g].dst;
            RatVec comp(m + 1);
            bool nz = false;
            for (int v = 1; v <= m; ++v) {
                comp[v] = maps[g][v] * maps[f][v];
                if (sgn(comp[v]) != 0) nz = true;
            }
            if (!nz) continue;
            auto it = hom_of.find({x, z});
            if (it == hom_of.end()) throw std::logic_error("composite outside Hom space");
            RatMatrix M(m + 1, it->second.size());
            for (std::size_t c = 0; c < it->second.size(); ++c)
                for (int v = 0; v <= m; ++v) M(v, c) = maps[it->second[c]][v];
            auto sol = solve(M, comp);
            if (!sol) throw std::logic_error("composite not in span");
            SparseVec sv;
            for (std::size_t c = 0; c < it->second.size(); ++c)
                if (sgn((*sol)[c]) != 0) sv.emplace_back(it->second[c], (*sol)[c]);
            mult[{static_cast<int>(g), static_cast<int>(f)}] = sv;
        }
    return make_abstract(names, basis, mult);
}

std::vector<int> gamma_to_auslander(int n)
{
    int m = n - 2;
    auto mods = interval_modules(m);
    std::vector<int> out(static_cast<std::size_t>((n - 1) * (n - 2) / 2));
    for (int j = 2; j <= n - 1; ++j)
        for (int i = 1; i < j; ++i) {
            IntervalModule want{m, n - j, n - 1 - i};
            for (std::size_t k = 0; k < mods.size(); ++k)
                if (mods[k] == want) out[q_index(n, i, j)] = static_cast<int>(k);
        }
    return out;
}

}  // namespace fsk
