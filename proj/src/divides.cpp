#include "fsk/divides.hpp"

#include "fsk/families.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace fsk {

std::vector<int> Divide::double_points() const
{
    std::vector<int> out;
    for (std::size_t v = 0; v < endpoint.size(); ++v)
        if (!endpoint[v]) out.push_back(static_cast<int>(v));
    return out;
}

void Divide::check() const
{
    std::size_t nv = endpoint.size();
    if (rotation.size() != nv) throw InvalidDivide("rotation system size mismatch");
    if (!xy.empty() && xy.size() != nv) throw InvalidDivide("coordinate count mismatch");
    std::vector<int> incid(nv, 0);
    for (std::size_t s = 0; s < segments.size(); ++s) {
        const auto& g = segments[s];
        if (g.a < 0 || g.b < 0 || g.a >= static_cast<int>(nv) || g.b >= static_cast<int>(nv))
            throw InvalidDivide("segment " + std::to_string(s) + " has a bad endpoint");
        if (g.a == g.b) throw InvalidDivide("segment " + std::to_string(s) + " is a loop");
        if (g.branch < 0 || g.branch >= branches) throw InvalidDivide("segment " + std::to_string(s) + " has a bad branch");
        ++incid[g.a];
        ++incid[g.b];
    }
    for (std::size_t v = 0; v < nv; ++v) {
        std::size_t want = endpoint[v] ? 1 : 4;
        if (rotation[v].size() != want || incid[v] != static_cast<int>(want))
            throw InvalidDivide("vertex " + std::to_string(v) + " has valence " + std::to_string(incid[v]));
        for (int s : rotation[v]) {
            if (s < 0 || s >= static_cast<int>(segments.size()))
                throw InvalidDivide("rotation at vertex " + std::to_string(v) + " names a bad segment");
            if (segments[s].a != static_cast<int>(v) && segments[s].b != static_cast<int>(v))
                throw InvalidDivide("rotation at vertex " + std::to_string(v) + " names a segment not incident to it");
        }
    }
    // branches pass straight through double points: opposite half-edges share a branch
    for (std::size_t v = 0; v < nv; ++v) {
        if (endpoint[v]) continue;
        const auto& r = rotation[v];
        if (segments[r[0]].branch != segments[r[2]].branch || segments[r[1]].branch != segments[r[3]].branch)
            throw InvalidDivide("branches do not cross transversally at vertex " + std::to_string(v));
    }
    std::vector<int> ends(branches, 0);
    for (std::size_t v = 0; v < nv; ++v)
        if (endpoint[v]) ++ends[segments[rotation[v][0]].branch];
    for (int b = 0; b < branches; ++b)
        if (ends[b] != 2) throw InvalidDivide("branch " + std::to_string(b) + " is not an immersed interval");
    // connectivity
    std::vector<int> seen(nv, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int s : rotation[v]) {
            int u = segments[s].a == v ? segments[s].b : segments[s].a;
            if (!seen[u]) {
                seen[u] = 1;
                q.push_back(u);
            }
        }
    }
    if (std::count(seen.begin(), seen.end(), 0)) throw InvalidDivide("divide is not connected");
}

Divide gn_divide(int n)
{
    if (n < 3) throw std::invalid_argument("need n >= 3");
    int m = n / 2;
    bool odd = n % 2 == 1;
    // wires: 0 = vertical line (odd n), k = parabola k
    std::vector<std::pair<int, int>> right;
    for (int j = 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k) right.push_back({j, k});
    std::sort(right.begin(), right.end(), [](auto x, auto y) { return std::make_pair(-x.second, -x.first) < std::make_pair(-y.second, -y.first); });
    std::vector<std::pair<int, int>> seq(right.rbegin(), right.rend());
    if (odd)
        for (int k = m; k >= 1; --k) seq.push_back({0, k});
    seq.insert(seq.end(), right.begin(), right.end());
    std::vector<int> order;
    if (odd) order.push_back(0);
    for (int k = 1; k <= m; ++k) order.push_back(k);
    int W = static_cast<int>(order.size());
    int C = static_cast<int>(seq.size());

    Divide d;
    d.branches = W;
    auto wire_branch = [&](int w) { return odd ? w : w - 1; };
    // vertices: left ends, crossings, right ends
    for (int p = 0; p < W; ++p) {
        d.endpoint.push_back(1);
        d.xy.push_back({-1.0, static_cast<double>(p)});
    }
    std::vector<int> last(W + 1, -1);
    for (int p = 0; p < W; ++p) last[order[p]] = p;
    d.rotation.assign(W, {});
    auto add_segment = [&](int w, int to) {
        int s = static_cast<int>(d.segments.size());
        d.segments.push_back({last[w], to, wire_branch(w)});
        if (d.endpoint[last[w]]) d.rotation[last[w]].push_back(s);
        last[w] = to;
        return s;
    };
    for (int t = 0; t < C; ++t) {
        auto [a, b] = seq[t];
        int ia = static_cast<int>(std::find(order.begin(), order.end(), a) - order.begin());
        int ib = static_cast<int>(std::find(order.begin(), order.end(), b) - order.begin());
        if (std::abs(ia - ib) != 1) throw std::logic_error("wiring crossing between non-adjacent wires");
        int lv = std::min(ia, ib);
        int lower = order[lv], upper = order[lv + 1];
        int v = static_cast<int>(d.endpoint.size());
        d.endpoint.push_back(0);
        d.xy.push_back({static_cast<double>(t), lv + 0.5});
        d.rotation.push_back({});
        int ll = add_segment(lower, v);
        int ul = add_segment(upper, v);
        std::swap(order[lv], order[lv + 1]);
        // outgoing slots are filled once every segment exists
        d.rotation[v] = {-1, -1, ul, ll};  // LR, UR, UL, LL
    }
    for (int p = 0; p < W; ++p) {
        int v = static_cast<int>(d.endpoint.size());
        d.endpoint.push_back(1);
        d.xy.push_back({static_cast<double>(C), static_cast<double>(p)});
        d.rotation.push_back({});
        add_segment(order[p], v);
        d.rotation[v].push_back(static_cast<int>(d.segments.size()) - 1);
    }
    for (std::size_t s = 0; s < d.segments.size(); ++s) {
        int from = d.segments[s].a;
        if (d.endpoint[from]) continue;
        int br = d.segments[s].branch;
        auto& r = d.rotation[from];
        // LR continues the wire that came in upper-left
        if (d.segments[r[2]].branch == br)
            r[0] = static_cast<int>(s);
        else
            r[1] = static_cast<int>(s);
    }
    d.check();
    return d;
}

namespace {

struct Face {
    std::vector<int> darts;  // 2 * segment + direction
};

int dart_from(const Divide& d, int dart) { return dart % 2 ? d.segments[dart / 2].b : d.segments[dart / 2].a; }
int dart_to(const Divide& d, int dart) { return dart % 2 ? d.segments[dart / 2].a : d.segments[dart / 2].b; }

std::vector<Face> faces(const Divide& d)
{
    std::size_t nd = 2 * d.segments.size();
    std::vector<int> face_of(nd, -1);
    std::vector<Face> out;
    for (std::size_t start = 0; start < nd; ++start) {
        if (face_of[start] >= 0) continue;
        Face f;
        int dart = static_cast<int>(start);
        while (face_of[dart] < 0) {
            face_of[dart] = static_cast<int>(out.size());
            f.darts.push_back(dart);
            int v = dart_to(d, dart);
            const auto& r = d.rotation[v];
            int s = dart / 2;
            std::size_t k = std::find(r.begin(), r.end(), s) - r.begin();
            int ns = r[(k + 1) % r.size()];
            dart = 2 * ns + (d.segments[ns].a == v ? 0 : 1);
        }
        out.push_back(f);
    }
    return out;
}

}  // namespace

SignedRegions regions_and_signs(const Divide& d)
{
    d.check();
    SignedRegions out;
    std::vector<std::vector<int>> seg_faces(d.segments.size());
    for (const auto& f : faces(d)) {
        bool inner = true;
        for (int dart : f.darts)
            if (d.endpoint[dart_from(d, dart)]) inner = false;
        if (!inner) continue;
        Region r;
        for (int dart : f.darts) {
            r.vertices.push_back(dart_from(d, dart));
            r.segments.push_back(dart / 2);
            seg_faces[dart / 2].push_back(static_cast<int>(out.regions.size()));
        }
        out.regions.push_back(r);
    }
    std::size_t N = out.regions.size();
    std::vector<std::set<int>> adj(N);
    for (const auto& fs : seg_faces)
        if (fs.size() == 2) {
            if (fs[0] == fs[1]) throw ColoringFailure("a region borders itself");
            adj[fs[0]].insert(fs[1]);
            adj[fs[1]].insert(fs[0]);
        }
    auto height = [&](const Region& r) {
        if (d.xy.empty()) return 0.0;
        double s = 0;
        for (int v : r.vertices) s += d.xy[v].second;
        return s / static_cast<double>(r.vertices.size());
    };
    std::vector<int> color(N, 0);
    for (std::size_t s0 = 0; s0 < N; ++s0) {
        if (color[s0]) continue;
        std::vector<int> comp;
        std::deque<int> q{static_cast<int>(s0)};
        color[s0] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            comp.push_back(u);
            for (int w : adj[u]) {
                if (!color[w]) {
                    color[w] = -color[u];
                    q.push_back(w);
                } else if (color[w] == color[u]) {
                    throw ColoringFailure("adjacent regions " + std::to_string(u) + " and " + std::to_string(w) +
                                          " get the same sign");
                }
            }
        }
        int low = comp[0];
        for (int u : comp)
            if (height(out.regions[u]) < height(out.regions[low])) low = u;
        int flip = color[low] == -1 ? 1 : -1;
        for (int u : comp) color[u] *= flip;
    }
    for (std::size_t i = 0; i < N; ++i) out.regions[i].sign = color[i];
    return out;
}

ACQuiverData acampo_quiver(const Divide& d)
{
    SignedRegions sr = regions_and_signs(d);
    ACQuiverData out;
    Quiver q;
    std::map<int, int> saddle;
    for (int v : d.double_points()) {
        saddle[v] = q.add_vertex("s" + std::to_string(v));
        out.kind.push_back("saddle");
        out.feature.push_back(v);
        out.xy.push_back(d.xy.empty() ? std::make_pair(0.0, 0.0) : d.xy[v]);
    }
    std::vector<int> rv;
    for (std::size_t i = 0; i < sr.regions.size(); ++i) {
        const auto& r = sr.regions[i];
        rv.push_back(q.add_vertex((r.sign < 0 ? "N" : "P") + std::to_string(i)));
        out.kind.push_back(r.sign < 0 ? "negative" : "positive");
        out.feature.push_back(static_cast<int>(i));
        // mean abscissa, height of the leftmost corner
        double x = 0, y = 0, left = 1e300;
        if (!d.xy.empty())
            for (int v : r.vertices) {
                x += d.xy[v].first / static_cast<double>(r.vertices.size());
                if (d.xy[v].first < left) {
                    left = d.xy[v].first;
                    y = d.xy[v].second;
                }
            }
        out.xy.push_back({x, y});
    }
    std::map<std::pair<int, int>, int> arrow;
    for (std::size_t i = 0; i < sr.regions.size(); ++i) {
        std::set<int> verts(sr.regions[i].vertices.begin(), sr.regions[i].vertices.end());
        for (int v : verts) {
            int a = sr.regions[i].sign < 0 ? rv[i] : saddle[v];
            int b = sr.regions[i].sign < 0 ? saddle[v] : rv[i];
            arrow[{a, b}] = q.add_arrow(a, b, q.vertices[a] + "-" + q.vertices[b]);
        }
    }
    std::vector<Relation> rels;
    for (std::size_t i = 0; i < sr.regions.size(); ++i) {
        if (sr.regions[i].sign > 0) continue;
        for (std::size_t j = 0; j < sr.regions.size(); ++j) {
            if (sr.regions[j].sign < 0) continue;
            std::vector<Path> paths;
            for (const auto& [v, s] : saddle)
                if (arrow.count({rv[i], s}) && arrow.count({s, rv[j]}))
                    paths.push_back(Path{rv[i], rv[j], {arrow.at({rv[i], s}), arrow.at({s, rv[j]})}});
            for (std::size_t k = 1; k < paths.size(); ++k) rels.push_back(Relation{{{Rational(1), paths[0]}, {Rational(-1), paths[k]}}});
        }
    }
    out.algebra = build_algebra(q, rels);
    return out;
}

std::vector<int> gn_vertex_labels(int n, const ACQuiverData& q)
{
    // features on level l (left to right) run along the hook of cells with corner (l+1, b)
    bool odd = n % 2 == 1;
    std::map<int, std::vector<std::pair<double, int>>> levels;
    for (std::size_t v = 0; v < q.kind.size(); ++v)
        levels[static_cast<int>(q.xy[v].second)].push_back({q.xy[v].first, static_cast<int>(v)});
    std::vector<int> out(q.kind.size(), -1);
    for (auto& [lv, items] : levels) {
        std::sort(items.begin(), items.end());
        if (odd) std::reverse(items.begin(), items.end());
        int a = lv + 1, b = odd ? n - lv : n - 1 - lv;
        std::vector<std::pair<int, int>> cells;
        for (int J = a + 1; J <= std::min(b, n - 1); ++J) cells.push_back({a, J});
        if (b <= n - 1)
            for (int I = a + 1; I < b; ++I) cells.push_back({I, b});
        if (cells.size() != items.size()) throw std::logic_error("level " + std::to_string(lv) + " does not fit its hook");
        for (std::size_t k = 0; k < items.size(); ++k) out[items[k].second] = gt_index(n, cells[k].first, cells[k].second);
    }
    return out;
}

MilnorCounts milnor_counts(const Divide& d)
{
    MilnorCounts c;
    c.double_points = static_cast<int>(d.double_points().size());
    for (const auto& r : regions_and_signs(d).regions) (r.sign < 0 ? c.negative : c.positive)++;
    c.milnor_number = c.double_points + c.negative + c.positive;
    return c;
}

MilnorCounts gn_formula_counts(int n)
{
    MilnorCounts c;
    if (n % 2) {
        c.double_points = (n - 1) * (n - 1) / 4;
        c.negative = c.positive = (n - 1) * (n - 3) / 8;
    } else {
        c.double_points = n * (n - 2) / 4;
        c.negative = n * (n - 2) / 8;
        c.positive = (n - 4) * (n - 2) / 8;
    }
    c.milnor_number = c.double_points + c.negative + c.positive;
    return c;
}

FibreInvariants fibre_invariants(const Divide& d)
{
    FibreInvariants f;
    f.milnor_number = milnor_counts(d).milnor_number;
    f.euler_characteristic = 1 - f.milnor_number;
    int interior = 0;
    for (const auto& s : d.segments)
        if (!d.endpoint[s.a] && !d.endpoint[s.b]) ++interior;
    if (-interior != f.euler_characteristic)
        throw InvariantMismatch("chi = " + std::to_string(f.euler_characteristic) + " but the divide has " +
                                std::to_string(interior) + " interior segments");
    f.punctures = d.branches;
    int twice_genus = 2 - f.euler_characteristic - f.punctures;
    if (twice_genus < 0 || twice_genus % 2) throw InvariantMismatch("genus is not a non-negative integer");
    f.genus = twice_genus / 2;
    return f;
}

VerifyReport iyama_surface_check(int n)
{
    VerifyReport rep;
    rep.name = "iyama_surface n=" + std::to_string(n);
    if (n < 3) throw std::invalid_argument("need n >= 3");
    int chi_x = 2 - 0 - (1 + (n - 2));
    int r0 = n - 2;
    std::vector<std::pair<int, int>> edges;
    for (int J = 2; J <= n - 1; ++J)
        for (int I = 1; I < J; ++I) edges.push_back({I, J - 1});
    int r1 = static_cast<int>(edges.size());
    int chi_r = r0 - r1;
    if (chi_r * 2 != (3 - n) * (n - 2)) rep.fail("ribbon graph chi " + std::to_string(chi_r) + " differs from (3-n)(n-2)/2");
    if (2 * (chi_x + chi_r) != n * (3 - n))
        rep.fail("chi(X) + chi(R) = " + std::to_string(chi_x + chi_r) + " differs from n(3-n)/2");
    if (chi_x + chi_r != 1 - (n - 1) * (n - 2) / 2) rep.fail("glued surface does not match the Milnor fibre");
    std::vector<int> parent(r0 + 1);
    for (int v = 0; v <= r0; ++v) parent[v] = v;
    std::function<int(int)> root = [&](int v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
    for (auto [a, b] : edges) parent[root(a)] = root(b);
    for (int v = 1; v <= r0; ++v)
        if (root(v) != root(1)) rep.fail("ribbon graph is disconnected");
    rep.details.push_back("chi(X)=" + std::to_string(chi_x) + " R0=" + std::to_string(r0) + " R1=" + std::to_string(r1));
    return rep;
}

bool composition_nonzero(int I1, int J1, int I2, int J2, int I3, int J3)
{
    return I1 <= I2 && I2 <= I3 && I3 <= J1 - 1 && J1 - 1 <= J2 - 1 && J2 - 1 <= J3 - 1;
}

FDAlgebra iyama_cycle_algebra(int n)
{
    if (n < 3) throw std::invalid_argument("need n >= 3");
    std::vector<std::pair<int, int>> verts(static_cast<std::size_t>((n - 1) * (n - 2) / 2));
    std::vector<std::string> names(verts.size());
    for (int J = 2; J <= n - 1; ++J)
        for (int I = 1; I < J; ++I) {
            int v = q_index(n, I, J);
            verts[v] = {I, J};
            names[v] = "Lambda" + std::to_string(I) + "," + std::to_string(J);
        }
    int N = static_cast<int>(verts.size());
    std::vector<BasisElement> basis;
    std::map<std::pair<int, int>, int> id;
    for (int v = 0; v < N; ++v) {
        BasisElement e;
        e.src = e.dst = v;
        e.idempotent = true;
        e.name = "id_" + names[v];
        id[{v, v}] = static_cast<int>(basis.size());
        basis.push_back(e);
    }
    auto hom = [&](int a, int b) {
        auto [I, J] = verts[a];
        auto [K, L] = verts[b];
        return I <= K && K < J && J <= L;
    };
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (a != b && hom(a, b)) {
                BasisElement e;
                e.src = a;
                e.dst = b;
                e.name = "y(" + names[a] + "," + names[b] + ")";
                id[{a, b}] = static_cast<int>(basis.size());
                basis.push_back(e);
            }
    std::map<std::pair<int, int>, SparseVec> mult;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (a == b || !id.count({a, b})) continue;
            for (int c = 0; c < N; ++c) {
                if (c == b || !id.count({b, c}) || !id.count({a, c})) continue;
                auto [I1, J1] = verts[a];
                auto [I2, J2] = verts[b];
                auto [I3, J3] = verts[c];
                if (composition_nonzero(I1, J1, I2, J2, I3, J3)) mult[{id.at({b, c}), id.at({a, b})}] = {{id.at({a, c}), Rational(1)}};
            }
        }
    return make_abstract(names, basis, mult);
}

}  // namespace fsk
