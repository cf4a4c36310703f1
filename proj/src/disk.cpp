#include "fsk/disk.hpp"

#include "fsk/families.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace fsk {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

int other_end(const ArcLabel& a, int s) { return a.first == s ? a.second : a.first; }

bool has_end(const ArcLabel& a, int s) { return a.first == s || a.second == s; }

}  // namespace

ArcLabel arc_label(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::string arc_string(const ArcLabel& a) { return std::to_string(a.first) + std::to_string(a.second); }

std::string ArcPair::tag() const { return arc_string(first) + "x" + arc_string(second); }

ArcPair arc_pair(const ArcLabel& a, const ArcLabel& b)
{
    if (a == b) throw std::invalid_argument("pair of identical arcs " + arc_string(a));
    return a < b ? ArcPair{a, b} : ArcPair{b, a};
}

std::vector<ArcLabel> ArcCollection::arcs() const
{
    std::set<ArcLabel> s;
    for (const auto& p : pairs) {
        s.insert(p.first);
        s.insert(p.second);
    }
    return {s.begin(), s.end()};
}

std::vector<Arc> place_arcs(int n, const std::vector<ArcLabel>& system)
{
    std::map<int, std::vector<std::pair<int, ArcLabel>>> seg;
    for (const auto& a : system) {
        if (a.first == a.second) throw std::invalid_argument("arc with both ends on segment " + std::to_string(a.first));
        if (a.first < 0 || a.second >= n) throw std::out_of_range("arc label out of range: " + arc_string(a));
        seg[a.first].push_back({mod(a.second - a.first, n), a});
        seg[a.second].push_back({mod(a.first - a.second, n), a});
    }
    std::map<std::pair<ArcLabel, int>, Rational> off;
    for (auto& [s, l] : seg) {
        std::stable_sort(l.begin(), l.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
        for (std::size_t k = 0; k < l.size(); ++k)
            off[{l[k].second, s}] = Rational(static_cast<long>(k + 1), static_cast<long>(l.size() + 1));
    }
    std::vector<Arc> out;
    for (const auto& a : system) {
        Arc arc;
        arc.label = a;
        arc.e0 = {a.first, off.at({a, a.first})};
        arc.e1 = {a.second, off.at({a, a.second})};
        out.push_back(arc);
    }
    return out;
}

Positions arc_positions(int n, const std::vector<ArcLabel>& system)
{
    Positions pos;
    for (const auto& arc : place_arcs(n, system)) {
        pos[{arc.label, arc.e0.segment}] = arc.e0.segment + arc.e0.offset;
        pos[{arc.label, arc.e1.segment}] = arc.e1.segment + arc.e1.offset;
    }
    return pos;
}

bool arcs_cross(const Positions& pos, const ArcLabel& a, const ArcLabel& b)
{
    if (a == b) return false;
    Rational a0 = pos.at({a, a.first}), a1 = pos.at({a, a.second});
    Rational b0 = pos.at({b, b.first}), b1 = pos.at({b, b.second});
    if (a0 > a1) std::swap(a0, a1);
    auto inside = [&](const Rational& x) { return a0 < x && x < a1; };
    return inside(b0) != inside(b1);
}

std::vector<ArcLabel> acampo_arc_labels(int n)
{
    if (n < 3) throw std::invalid_argument("need n >= 3");
    std::vector<ArcLabel> out;
    for (int I = 1; I < n; ++I) {
        int s = (mod(I - (n - 1), 2) == 0) ? n - 1 : (n % 2 ? n - 2 : n);
        out.push_back(arc_label((s - I) / 2, (s + I) / 2));
    }
    return out;
}

namespace {

int pair_type(const ArcPair& p)
{
    int a = p.first.second - p.first.first, b = p.second.second - p.second.first;
    if (a % 2 && b % 2) return 0;
    if (a % 2 == 0 && b % 2 == 0) return 2;
    return 1;
}

std::pair<int, int> spans(const ArcPair& p)
{
    int a = p.first.second - p.first.first, b = p.second.second - p.second.first;
    return {std::min(a, b), std::max(a, b)};
}

}  // namespace

ArcCollection acampo_arcs(int n)
{
    auto arcs = acampo_arc_labels(n);
    ArcCollection c;
    c.n = n;
    c.provenance = "acampo";
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j) c.pairs.push_back(arc_pair(arcs[i], arcs[j]));
    std::stable_sort(c.pairs.begin(), c.pairs.end(), [](const ArcPair& x, const ArcPair& y) {
        return std::make_pair(pair_type(x), spans(x)) < std::make_pair(pair_type(y), spans(y));
    });
    return c;
}

ArcCollection iyama_arcs(int n)
{
    if (n < 3) throw std::invalid_argument("need n >= 3");
    ArcCollection c;
    c.n = n;
    c.provenance = "iyama";
    for (int j = 2; j < n; ++j)
        for (int i = 1; i < j; ++i) c.pairs.push_back(arc_pair({0, i}, {0, j}));
    return c;
}

std::vector<int> acampo_vertex_map(int n)
{
    std::vector<int> out;
    for (const auto& p : acampo_arcs(n).pairs) {
        auto [I, J] = spans(p);
        out.push_back(gt_index(n, I, J));
    }
    return out;
}

std::vector<int> iyama_vertex_map(int n)
{
    std::vector<int> out;
    for (const auto& p : iyama_arcs(n).pairs) out.push_back(q_index(n, p.first.second, p.second.second));
    return out;
}

bool auroux_generation_check(int n, const std::vector<ArcLabel>& system)
{
    if (system.empty()) return n <= 1;
    Positions pos = arc_positions(n, system);
    for (std::size_t i = 0; i < system.size(); ++i)
        for (std::size_t j = i + 1; j < system.size(); ++j)
            if (arcs_cross(pos, system[i], system[j])) return false;
    // boundary points in clockwise order, each with its partner across the arc
    std::vector<std::pair<Rational, int>> pts;
    for (const auto& a : system) {
        int k = static_cast<int>(pts.size());
        pts.push_back({pos.at({a, a.first}), k + 1});
        pts.push_back({pos.at({a, a.second}), k});
    }
    std::vector<int> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return pts[x].first < pts[y].first; });
    std::vector<int> rank_of(pts.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank_of[order[r]] = static_cast<int>(r);
    int m = static_cast<int>(order.size());
    // interval r runs from point order[r] to point order[r+1]
    auto stops_in = [&](int r) {
        Rational a = pts[order[r]].first, b = pts[order[(r + 1) % m]].first;
        int cnt = 0;
        for (int s = 0; s < n; ++s) {
            Rational x = s;
            bool in = a < b ? (a < x && x < b) : (x > a || x < b);
            if (in) ++cnt;
        }
        return cnt;
    };
    std::vector<bool> seen(m, false);
    for (int r0 = 0; r0 < m; ++r0) {
        if (seen[r0]) continue;
        int stops = 0;
        int r = r0;
        while (!seen[r]) {
            seen[r] = true;
            stops += stops_in(r);
            int end_pt = order[(r + 1) % m];
            r = rank_of[pts[end_pt].second];
        }
        if (stops > 1) return false;
    }
    return true;
}

bool auroux_generation_check(const ArcCollection& c) { return auroux_generation_check(c.n, c.arcs()); }

std::vector<ReebChord> reeb_chords(int n, const std::vector<ArcLabel>& system, const ArcLabel& a, const ArcLabel& b)
{
    std::vector<ReebChord> out;
    if (a == b) return out;
    Positions pos = arc_positions(n, system);
    for (int s : {a.first, a.second}) {
        if (!has_end(b, s)) continue;
        Rational pa = pos.at({a, s}), pb = pos.at({b, s});
        if (!(pb < pa)) continue;
        bool minimal = true;
        for (const auto& c : system)
            if (has_end(c, s) && c != a && c != b) {
                Rational pc = pos.at({c, s});
                if (pb < pc && pc < pa) minimal = false;
            }
        if (minimal) out.push_back({s, a, b, pa, pb});
    }
    return out;
}

namespace {

struct Occupied {
    int segment;
    Rational lo, hi;
};

std::vector<Occupied> occupancy(const Positions& pos, const Strand& s)
{
    if (s.segment < 0)
        return {{s.from.first, pos.at({s.from, s.from.first}), pos.at({s.from, s.from.first})},
                {s.from.second, pos.at({s.from, s.from.second}), pos.at({s.from, s.from.second})}};
    return {{s.segment, pos.at({s.to, s.segment}), pos.at({s.from, s.segment})}};
}

bool valid_generator(const Positions& pos, const Generator& g)
{
    std::vector<std::vector<Occupied>> occ;
    for (const auto& s : g) occ.push_back(occupancy(pos, s));
    for (std::size_t i = 0; i < occ.size(); ++i)
        for (std::size_t j = i + 1; j < occ.size(); ++j)
            for (const auto& a : occ[i])
                for (const auto& b : occ[j])
                    if (a.segment == b.segment && !(a.hi < b.lo || b.hi < a.lo)) return false;
    return true;
}

}  // namespace

std::vector<Generator> hom_generators(const Positions& pos, const ArcPair& x, const ArcPair& y)
{
    std::vector<Generator> out;
    ArcLabel X[2] = {x.first, x.second};
    ArcLabel Y[2] = {y.first, y.second};
    for (int perm = 0; perm < 2; ++perm) {
        ArcLabel T[2] = {Y[perm], Y[1 - perm]};
        std::vector<std::vector<Strand>> options(2);
        for (int k = 0; k < 2; ++k) {
            if (X[k] == T[k]) {
                options[k].push_back({X[k], X[k], -1});
                continue;
            }
            for (int s : {X[k].first, X[k].second})
                if (has_end(T[k], s) && pos.at({T[k], s}) < pos.at({X[k], s})) options[k].push_back({X[k], T[k], s});
        }
        for (const auto& a : options[0])
            for (const auto& b : options[1]) {
                Generator g{a, b};
                if (!valid_generator(pos, g)) continue;
                std::sort(g.begin(), g.end());
                out.push_back(g);
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Generator> compose_generators(const Positions& pos, const Generator& first, const Generator& second)
{
    Generator out;
    for (const auto& s : first) {
        auto it = std::find_if(second.begin(), second.end(), [&](const Strand& t) { return t.from == s.to; });
        if (it == second.end()) throw std::invalid_argument("generators do not compose");
        const Strand& t = *it;
        if (s.segment < 0)
            out.push_back(t);
        else if (t.segment < 0)
            out.push_back(s);
        else {
            if (s.segment != t.segment || s.from == t.to) return std::nullopt;
            out.push_back({s.from, t.to, s.segment});
        }
    }
    if (!valid_generator(pos, out)) return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

FDAlgebra endo_quiver(const ArcCollection& c)
{
    if (!auroux_generation_check(c)) throw GenerationFailure("collection fails the generation hypothesis");
    Positions pos = arc_positions(c.n, c.arcs());
    std::size_t N = c.pairs.size();
    std::vector<std::string> names;
    for (const auto& p : c.pairs) names.push_back(p.tag());
    std::vector<BasisElement> basis;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Generator>> gens;
    std::map<std::pair<std::size_t, std::size_t>, std::map<Generator, int>> index;
    for (std::size_t x = 0; x < N; ++x) {
        BasisElement e;
        e.src = e.dst = static_cast<int>(x);
        e.idempotent = true;
        e.name = "id_" + names[x];
        index[{x, x}][{{c.pairs[x].first, c.pairs[x].first, -1}, {c.pairs[x].second, c.pairs[x].second, -1}}] =
            static_cast<int>(basis.size());
        basis.push_back(e);
    }
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            gens[{x, y}] = hom_generators(pos, c.pairs[x], c.pairs[y]);
            int k = 0;
            for (const auto& g : gens[{x, y}]) {
                if (index[{x, y}].count(g)) continue;
                BasisElement e;
                e.src = static_cast<int>(x);
                e.dst = static_cast<int>(y);
                e.name = names[x] + "->" + names[y] + (k ? "#" + std::to_string(k) : "");
                ++k;
                index[{x, y}][g] = static_cast<int>(basis.size());
                basis.push_back(e);
            }
        }
    std::map<std::pair<int, int>, SparseVec> mult;
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            if (x == y) continue;
            for (const auto& g1 : gens[{x, y}])
                for (std::size_t z = 0; z < N; ++z) {
                    if (z == y) continue;
                    for (const auto& g2 : gens[{y, z}]) {
                        auto h = compose_generators(pos, g1, g2);
                        if (!h) continue;
                        int i1 = index[{x, y}].at(g1), i2 = index[{y, z}].at(g2);
                        mult[{i2, i1}] = {{index[{x, z}].at(*h), Rational(1)}};
                    }
                }
        }
    return make_abstract(names, basis, mult);
}

std::pair<int, int> local_hom(int n, const ArcPair& x, const ArcPair& y)
{
    std::set<ArcLabel> s{x.first, x.second, y.first, y.second};
    std::vector<ArcLabel> arcs(s.begin(), s.end());
    Positions pos = arc_positions(n, arcs);
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j)
            if (arcs_cross(pos, arcs[i], arcs[j]))
                throw std::invalid_argument("arcs " + arc_string(arcs[i]) + " and " + arc_string(arcs[j]) + " cross");
    return {static_cast<int>(hom_generators(pos, x, y).size()), static_cast<int>(hom_generators(pos, y, x).size())};
}

namespace {

bool interleave(const ArcLabel& a, const ArcLabel& b)
{
    std::set<int> labels{a.first, a.second, b.first, b.second};
    if (labels.size() < 4) return false;
    auto inside = [&](int v) { return a.first < v && v < a.second; };
    return inside(b.first) != inside(b.second);
}

bool factor_zero(const Positions& pos, const ArcLabel& a, const ArcLabel& b)
{
    if (a == b || interleave(a, b)) return false;
    for (int s : {a.first, a.second})
        if (has_end(b, s) && pos.at({b, s}) < pos.at({a, s})) return false;
    return true;
}

}  // namespace

bool orthogonal(int n, const ArcPair& x, const ArcPair& y)
{
    std::set<ArcLabel> s{x.first, x.second, y.first, y.second};
    Positions pos = arc_positions(n, {s.begin(), s.end()});
    for (int dir = 0; dir < 2; ++dir) {
        const ArcPair& P = dir ? y : x;
        const ArcPair& Q = dir ? x : y;
        ArcLabel p[2] = {P.first, P.second};
        ArcLabel q[2] = {Q.first, Q.second};
        for (int perm = 0; perm < 2; ++perm) {
            bool any = factor_zero(pos, p[0], q[perm]) || factor_zero(pos, p[1], q[1 - perm]);
            if (!any) return false;
        }
    }
    return true;
}

ArcPair rotate_pair(int n, const ArcPair& p, int k)
{
    auto r = [&](const ArcLabel& a) { return arc_label(mod(a.first + k, n), mod(a.second + k, n)); };
    return arc_pair(r(p.first), r(p.second));
}

ArcCollection rotate_labels(const ArcCollection& c, int k)
{
    ArcCollection out = c;
    for (auto& p : out.pairs) p = rotate_pair(c.n, p, k);
    if (mod(k, c.n) != 0) out.provenance = "intermediate";
    return out;
}

ArcPair triangle_cone(const ArcPair& x, const ArcPair& y)
{
    std::set<ArcLabel> sx{x.first, x.second}, sy{y.first, y.second};
    std::vector<ArcLabel> shared;
    for (const auto& a : sx)
        if (sy.count(a)) shared.push_back(a);
    if (shared.size() != 1) throw NoTriangle(x.tag() + " and " + y.tag() + " do not share exactly one arc");
    ArcLabel p = shared[0];
    ArcLabel u = x.first == p ? x.second : x.first;
    ArcLabel v = y.first == p ? y.second : y.first;
    std::set<int> labels{u.first, u.second, v.first, v.second};
    if (labels.size() != 3) throw NoTriangle(x.tag() + " and " + y.tag() + " do not span a triangle");
    std::vector<int> l(labels.begin(), labels.end());
    std::set<ArcLabel> tri{{l[0], l[1]}, {l[0], l[2]}, {l[1], l[2]}};
    tri.erase(u);
    tri.erase(v);
    ArcLabel w = *tri.begin();
    if (w == p) throw NoTriangle("third side coincides with the shared arc");
    return arc_pair(p, w);
}

ArcPair iso_auroux(int n, const ArcPair& x)
{
    const ArcLabel &a = x.first, &b = x.second;
    int j;
    if (has_end(b, a.first))
        j = a.first;
    else if (has_end(b, a.second))
        j = a.second;
    else
        throw NoTriangle(x.tag() + " has no common boundary segment");
    int i = other_end(a, j), k = other_end(b, j);
    // keep the arc ij with i -> j -> k clockwise
    auto cw = [&](int p, int q, int r) { return mod(q - p, n) < mod(r - p, n); };
    if (cw(i, j, k)) return arc_pair(a, arc_label(i, k));
    return arc_pair(b, arc_label(k, i));
}

namespace {

using Frame = std::function<int(int)>;

ArcLabel farc(const Frame& f, int a, int b) { return arc_label(f(a), f(b)); }

ArcPair ftag(const Frame& f, ArcLabel a, ArcLabel b) { return arc_pair(farc(f, a.first, a.second), farc(f, b.first, b.second)); }

struct Op {
    enum Kind { rot, cone, iso, replace } kind = rot;

    explicit Op(Kind k) : kind(k) {}
    ArcPair h{}, r{};
    ArcLabel u{}, v{}, w{};
    std::vector<ArcLabel> system;
};

void comb_level(int N, const Frame& fr, std::vector<Op>& ops, bool top)
{
    if (N == 3) return;
    int n = N - 1;
    auto cone = [&](const Frame& g, ArcLabel a, ArcLabel b, ArcLabel c, ArcLabel d) {
        Op op(Op::cone);
        op.h = ftag(g, a, b);
        op.r = ftag(g, c, d);
        ops.push_back(op);
    };
    if (N % 2 == 0) {
        Frame g = fr;
        if (top)
            ops.push_back(Op(Op::rot));
        else
            g = [fr, N](int s) { return fr((s + 1) % N); };
        comb_level(N - 1, g, ops, false);
        ArcLabel X{n - 1, n};
        for (int h = 1; h < n - 2; ++h) {
            if (h % 2) {
                int a = (h + 1) / 2, b = (2 * n - h - 3) / 2;
                cone(g, {0, b}, X, {a, b}, X);
            } else {
                int a = h / 2, b = (2 * n - h - 4) / 2;
                cone(g, {0, a}, X, {a, b}, X);
            }
        }
        for (int p = 1; p < n - 1; ++p) cone(g, {0, p}, {0, n - 1}, {0, p}, X);
        Op iso(Op::iso);
        iso.h = ftag(g, {0, n - 1}, X);
        ops.push_back(iso);
        if (!top) {
            std::vector<ArcLabel> sys;
            for (int a = 2; a < N; ++a) sys.push_back(farc(fr, 1, a));
            sys.push_back(farc(fr, 0, 1));
            for (int a = N - 1; a > 1; --a) {
                Op rep(Op::replace);
                rep.u = farc(fr, 1, a);
                rep.v = farc(fr, 0, 1);
                rep.w = farc(fr, 0, a);
                rep.system = sys;
                ops.push_back(rep);
                *std::find(sys.begin(), sys.end(), rep.u) = rep.w;
            }
        }
    } else {
        comb_level(N - 1, fr, ops, false);
        ArcLabel X{0, n};
        for (int h = 1; h < n - 1; ++h) {
            if (h % 2) {
                int a = (h + 1) / 2, b = (2 * n - h - 1) / 2;
                cone(fr, {0, b}, X, {a, b}, X);
            } else {
                int a = h / 2, b = (2 * n - h - 2) / 2;
                cone(fr, {0, a}, X, {a, b}, X);
            }
        }
    }
}

std::pair<int, int> lexkey(const ArcPair& p) { return {p.second.second, p.first.second}; }

class Comber {
public:
    explicit Comber(int n) : n_(n)
    {
        start_ = acampo_arcs(n);
        cur_ = start_.pairs;
        shifts_.assign(cur_.size(), 0);
    }

    CombingTrace run()
    {
        std::vector<Op> ops;
        comb_level(n_, [](int s) { return s; }, ops, true);
        for (const auto& op : ops) apply(op);
        final_sort();
        CombingTrace t;
        t.n = n_;
        t.start = start_;
        t.end.n = n_;
        t.end.pairs = cur_;
        t.end.provenance = "intermediate";
        if (cur_ == iyama_arcs(n_).pairs) t.end.provenance = "iyama";
        t.steps = steps_;
        t.shifts = shifts_;
        return t;
    }

private:
    int n_;
    ArcCollection start_;
    std::vector<ArcPair> cur_;
    std::vector<int> shifts_;
    std::vector<MutationStep> steps_;

    int find(const ArcPair& p) const
    {
        auto it = std::find(cur_.begin(), cur_.end(), p);
        if (it == cur_.end()) throw StepInvalid("step " + std::to_string(steps_.size()) + ": " + p.tag() + " not present");
        return static_cast<int>(it - cur_.begin());
    }

    bool orth(int i, int j) const { return orthogonal(n_, cur_[i], cur_[j]); }

    void swap(int i, int j)
    {
        std::swap(cur_[i], cur_[j]);
        std::swap(shifts_[i], shifts_[j]);
        steps_.push_back({"transpose_disjoint", {std::min(i, j), std::max(i, j)}, "", 0});
    }

    void apply(const Op& op)
    {
        switch (op.kind) {
        case Op::rot:
            for (auto& p : cur_) p = rotate_pair(n_, p, -1);
            steps_.push_back({"rotate_labels", {-1}, "", 0});
            break;
        case Op::cone: cone(op.h, op.r); break;
        case Op::iso: {
            int i = find(op.h);
            ArcPair y = iso_auroux(n_, op.h);
            cur_[i] = y;
            steps_.push_back({"iso_auroux", {i}, op.h.tag() + " ~ " + y.tag(), 0});
            break;
        }
        case Op::replace: {
            auto snapshot = cur_;
            for (const auto& t : snapshot) {
                if (t.first != op.u && t.second != op.u) continue;
                ArcLabel other = t.first == op.u ? t.second : t.first;
                if (std::find(op.system.begin(), op.system.end(), other) == op.system.end()) continue;
                if (other == op.v) {
                    int i = find(t);
                    ArcPair y = iso_auroux(n_, t);
                    if (y != arc_pair(op.v, op.w)) throw StepInvalid("re-anchoring " + t.tag() + " gave " + y.tag());
                    cur_[i] = y;
                    steps_.push_back({"iso_auroux", {i}, t.tag() + " ~ " + y.tag(), 0});
                } else {
                    cone(arc_pair(op.v, other), t);
                }
            }
            break;
        }
        }
    }

    void cone(const ArcPair& h, const ArcPair& r)
    {
        ArcPair c = triangle_cone(h, r);
        int hi = find(h), ri = find(r);
        auto d = local_hom(n_, h, r);
        while (std::abs(hi - ri) > 1) {
            int s = ri > hi ? 1 : -1;
            if (orth(hi, hi + s)) {
                swap(hi, hi + s);
                hi += s;
            } else if (orth(ri, ri - s)) {
                swap(ri, ri - s);
                ri -= s;
            } else {
                int lo = std::min(hi, ri), up = std::max(hi, ri);
                bool moved = false;
                for (int k = lo + 1; k < up && !moved; ++k) {
                    bool left = true, right = true;
                    for (int m = lo; m < k; ++m) left = left && orth(k, m);
                    if (left) {
                        for (int m = k; m > lo; --m) swap(m, m - 1);
                        (hi == lo ? hi : ri) += 1;
                        moved = true;
                        break;
                    }
                    for (int m = k + 1; m <= up; ++m) right = right && orth(k, m);
                    if (right) {
                        for (int m = k; m < up; ++m) swap(m, m + 1);
                        (hi == up ? hi : ri) -= 1;
                        moved = true;
                    }
                }
                if (!moved)
                    throw StepInvalid("step " + std::to_string(steps_.size()) + ": cannot bring " + h.tag() + " next to " +
                                      r.tag());
            }
        }
        std::string tri = "cone(" + h.tag() + ", " + r.tag() + ") = " + c.tag();
        if (hi < ri) {
            if (d.first != 1) throw StepInvalid("forward cone " + tri + " along a non-generator");
            int sh = shifts_[hi];
            cur_[hi] = c;
            cur_[ri] = h;
            shifts_[hi] = shifts_[ri] + 1;
            shifts_[ri] = sh;
            steps_.push_back({"cone_forward", {hi, ri}, tri, 1});
        } else {
            if (d.second != 1) throw StepInvalid("backward cone " + tri + " along a non-generator");
            int sh = shifts_[hi];
            cur_[ri] = h;
            cur_[hi] = c;
            shifts_[hi] = shifts_[ri] + 1;
            shifts_[ri] = sh;
            steps_.push_back({"cone_backward", {ri, hi}, tri, 1});
        }
    }

    void final_sort()
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < static_cast<int>(cur_.size()); ++i)
                if (lexkey(cur_[i]) > lexkey(cur_[i + 1]) && orth(i, i + 1)) {
                    swap(i, i + 1);
                    changed = true;
                }
        }
    }
};

}  // namespace

CombingTrace comb(int n)
{
    if (n < 3) throw std::invalid_argument("need n >= 3");
    return Comber(n).run();
}

void apply_step(int n, std::vector<ArcPair>& cur, const MutationStep& st)
{
    int sz = static_cast<int>(cur.size());
    auto idx_ok = [&](std::size_t need) {
        if (st.indices.size() != need) throw StepInvalid("wrong index count");
        if (need == 2 && st.indices[1] != st.indices[0] + 1) throw StepInvalid("indices not adjacent");
        if (st.kind != "rotate_labels")
            for (int i : st.indices)
                if (i < 0 || i >= sz) throw StepInvalid("index out of range");
    };
    if (st.kind == "rotate_labels") {
        idx_ok(1);
        for (auto& p : cur) p = rotate_pair(n, p, st.indices[0]);
    } else if (st.kind == "transpose_disjoint") {
        idx_ok(2);
        if (!orthogonal(n, cur[st.indices[0]], cur[st.indices[1]])) throw StepInvalid("objects not orthogonal");
        std::swap(cur[st.indices[0]], cur[st.indices[1]]);
    } else if (st.kind == "cone_forward") {
        idx_ok(2);
        ArcPair H = cur[st.indices[0]], R = cur[st.indices[1]];
        if (local_hom(n, H, R).first != 1) throw StepInvalid("Hom(H, R) is not one-dimensional");
        cur[st.indices[0]] = triangle_cone(H, R);
        cur[st.indices[1]] = H;
    } else if (st.kind == "cone_backward") {
        idx_ok(2);
        ArcPair R = cur[st.indices[0]], H = cur[st.indices[1]];
        if (local_hom(n, R, H).first != 1) throw StepInvalid("Hom(R, H) is not one-dimensional");
        cur[st.indices[0]] = H;
        cur[st.indices[1]] = triangle_cone(H, R);
    } else if (st.kind == "iso_auroux") {
        idx_ok(1);
        cur[st.indices[0]] = iso_auroux(n, cur[st.indices[0]]);
    } else {
        throw StepInvalid("unknown step kind");
    }
}

std::vector<ArcCollection> trace_states(const CombingTrace& t)
{
    std::vector<ArcCollection> out{t.start};
    auto cur = t.start.pairs;
    for (const auto& st : t.steps) {
        apply_step(t.n, cur, st);
        out.push_back(ArcCollection{t.n, cur, "after " + st.kind});
    }
    out.back().provenance = t.end.provenance;
    return out;
}

VerifyReport replay_trace(const CombingTrace& t)
{
    VerifyReport rep;
    rep.name = "comb replay n=" + std::to_string(t.n);
    auto cur = t.start.pairs;
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
        try {
            apply_step(t.n, cur, t.steps[s]);
        } catch (const std::exception& e) {
            rep.fail("step " + std::to_string(s) + " (" + t.steps[s].kind + "): " + e.what());
            return rep;
        }
    }
    if (cur != t.end.pairs) rep.fail("replay does not reproduce the recorded end collection");
    auto a = cur, b = iyama_arcs(t.n).pairs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) rep.fail("end collection is not the Iyama collection");
    return rep;
}

bool lex_ordered(const ArcCollection& c)
{
    for (const auto& p : c.pairs)
        if (p.first.first != 0 || p.second.first != 0) return false;
    for (std::size_t i = 0; i + 1 < c.pairs.size(); ++i)
        if (!(lexkey(c.pairs[i]) < lexkey(c.pairs[i + 1]))) return false;
    return true;
}

bool verify_lex_order(const CombingTrace& t) { return lex_ordered(t.end); }

}  // namespace fsk
