#include "fsk/algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace fsk {

int Quiver::vertex(const std::string& label) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown vertex " + label);
}

int Quiver::arrow(const std::string& label) const
{
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label == label) return static_cast<int>(i);
    throw std::invalid_argument("unknown arrow " + label);
}

int Quiver::add_vertex(const std::string& label)
{
    for (const auto& v : vertices)
        if (v == label) throw std::invalid_argument("duplicate vertex " + label);
    vertices.push_back(label);
    return static_cast<int>(vertices.size()) - 1;
}

int Quiver::add_arrow(int src, int dst, const std::string& label)
{
    for (const auto& a : arrows)
        if (a.label == label) throw std::invalid_argument("duplicate arrow " + label);
    arrows.push_back({src, dst, label});
    return static_cast<int>(arrows.size()) - 1;
}

bool Quiver::acyclic() const
{
    std::vector<int> indeg(vertices.size(), 0);
    for (const auto& a : arrows) ++indeg[a.dst];
    std::vector<int> stack;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (indeg[v] == 0) stack.push_back(static_cast<int>(v));
    std::size_t seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (const auto& a : arrows)
            if (a.src == v && --indeg[a.dst] == 0) stack.push_back(a.dst);
    }
    return seen == vertices.size();
}

bool Path::operator<(const Path& o) const
{
    if (src != o.src) return src < o.src;
    if (dst != o.dst) return dst < o.dst;
    return arrows < o.arrows;
}

const SparseVec& FDAlgebra::product(int i, int j) const
{
    static const SparseVec zero;
    auto it = mult_.find({i, j});
    return it == mult_.end() ? zero : it->second;
}

void FDAlgebra::set_product(int i, int j, SparseVec v)
{
    if (v.empty())
        mult_.erase({i, j});
    else
        mult_[{i, j}] = std::move(v);
}

const std::vector<int>& FDAlgebra::block(int i, int j) const { return blocks_.at(i).at(j); }

void FDAlgebra::finalize()
{
    std::size_t nv = quiver.vertices.size();
    idem_.assign(nv, -1);
    blocks_.assign(nv, std::vector<std::vector<int>>(nv));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& b = basis[k];
        if (b.idempotent) idem_.at(b.src) = static_cast<int>(k);
        blocks_.at(b.dst).at(b.src).push_back(static_cast<int>(k));
    }
    for (std::size_t v = 0; v < nv; ++v)
        if (idem_[v] < 0) throw std::logic_error("missing idempotent for " + quiver.vertices[v]);
}

namespace {

void axpy(std::map<int, Rational>& acc, const SparseVec& v, const Rational& c)
{
    for (const auto& [k, x] : v) {
        auto& slot = acc[k];
        slot += c * x;
    }
}

SparseVec to_sparse(const std::map<int, Rational>& m)
{
    SparseVec out;
    for (const auto& [k, x] : m)
        if (sgn(x) != 0) out.emplace_back(k, x);
    return out;
}

SparseVec act(const FDAlgebra& A, int arrow, const SparseVec& v)
{
    std::map<int, Rational> acc;
    for (const auto& [b, c] : v) {
        auto it = A.arrow_action.find({arrow, b});
        if (it != A.arrow_action.end()) axpy(acc, it->second, c);
    }
    return to_sparse(acc);
}

bool homogeneous(const std::vector<Relation>& rels)
{
    for (const auto& r : rels) {
        if (r.terms.empty()) return false;
        std::size_t len = r.terms.front().second.length();
        if (len == 0) return false;
        for (const auto& t : r.terms)
            if (t.second.length() != len) return false;
    }
    return true;
}

void check_relations(const Quiver& q, const std::vector<Relation>& rels)
{
    for (const auto& r : rels) {
        if (r.terms.empty()) throw std::invalid_argument("empty relation");
        bool nz = false;
        const Path& p0 = r.terms.front().second;
        for (const auto& [c, p] : r.terms) {
            if (sgn(c) != 0) nz = true;
            if (p.src != p0.src || p.dst != p0.dst) throw std::invalid_argument("relation paths not parallel");
            int at = p.src;
            for (int a : p.arrows) {
                if (q.arrows.at(a).src != at) throw std::invalid_argument("relation path not composable");
                at = q.arrows[a].dst;
            }
            if (at != p.dst) throw std::invalid_argument("relation path endpoint mismatch");
        }
        if (!nz) throw std::invalid_argument("relation with all coefficients zero");
    }
}

struct LabelOrder {
    std::vector<int> rank;
    explicit LabelOrder(const Quiver& q) : rank(q.arrows.size())
    {
        std::vector<int> idx(q.arrows.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return q.arrows[a].label < q.arrows[b].label; });
        for (std::size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = static_cast<int>(r);
    }
    bool less(const std::vector<int>& a, const std::vector<int>& b) const
    {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [&](int x, int y) { return rank[x] < rank[y]; });
    }
};

// columns sorted descending so that free columns, which survive as basis, are the smallest paths
struct BlockSolve {
    std::vector<int> free_cols;
    // pivot col -> expression over free cols
    std::map<int, std::vector<std::pair<int, Rational>>> pivot_expr;
};

BlockSolve solve_block(std::size_t ncols, const std::vector<std::map<int, Rational>>& rows)
{
    BlockSolve out;
    RatMatrix m(rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, x] : rows[r]) m(r, c) += x;
    auto rr = rref(m);
    std::vector<bool> piv(ncols, false);
    for (auto p : rr.pivot_cols) piv[p] = true;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!piv[c]) out.free_cols.push_back(static_cast<int>(c));
    for (std::size_t r = 0; r < rr.rank; ++r) {
        std::vector<std::pair<int, Rational>> e;
        for (int f : out.free_cols)
            if (sgn(rr.reduced(r, f)) != 0) e.emplace_back(f, -rr.reduced(r, f));
        out.pivot_expr[static_cast<int>(rr.pivot_cols[r])] = std::move(e);
    }
    return out;
}

void fill_products(FDAlgebra& A)
{
    for (std::size_t i = 0; i < A.basis.size(); ++i) {
        const auto& bi = A.basis[i];
        for (std::size_t j = 0; j < A.basis.size(); ++j) {
            if (A.basis[j].dst != bi.src) continue;
            SparseVec v{{static_cast<int>(j), Rational(1)}};
            for (int a : bi.path->arrows) {
                v = act(A, a, v);
                if (v.empty()) break;
            }
            A.set_product(static_cast<int>(i), static_cast<int>(j), std::move(v));
        }
    }
}

FDAlgebra build_graded(const Quiver& q, const std::vector<Relation>& rels)
{
    FDAlgebra A;
    A.quiver = q;
    A.relations = rels;
    LabelOrder order(q);
    std::vector<std::vector<int>> level;
    level.emplace_back();
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        BasisElement e;
        e.src = e.dst = static_cast<int>(v);
        e.path = Path{e.src, e.dst, {}};
        e.idempotent = true;
        e.name = "e_" + q.vertices[v];
        level[0].push_back(static_cast<int>(A.basis.size()));
        A.basis.push_back(e);
    }
    for (std::size_t L = 1;; ++L) {
        struct Cand {
            int arrow, lower;
            Path path;
        };
        std::map<std::pair<int, int>, std::vector<Cand>> groups;
        for (int b : level[L - 1])
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].src != A.basis[b].dst) continue;
                Path p = *A.basis[b].path;
                p.arrows.push_back(static_cast<int>(a));
                p.dst = q.arrows[a].dst;
                groups[{p.src, p.dst}].push_back({static_cast<int>(a), b, p});
            }
        if (groups.empty()) break;
        std::map<std::pair<int, int>, std::pair<std::pair<int, int>, int>> col_of;
        for (auto& [key, cands] : groups) {
            std::sort(cands.begin(), cands.end(),
                      [&](const Cand& x, const Cand& y) { return order.less(y.path.arrows, x.path.arrows); });
            for (std::size_t c = 0; c < cands.size(); ++c)
                col_of[{cands[c].arrow, cands[c].lower}] = {key, static_cast<int>(c)};
        }
        std::map<std::pair<int, int>, std::vector<std::map<int, Rational>>> rows;
        for (const auto& r : rels) {
            std::size_t k = r.terms.front().second.length();
            if (k > L) continue;
            for (int y : level[L - k]) {
                if (A.basis[y].dst != r.terms.front().second.src) continue;
                std::map<int, Rational> row;
                std::pair<int, int> key{A.basis[y].src, r.terms.front().second.dst};
                for (const auto& [c, p] : r.terms) {
                    SparseVec v{{y, Rational(1)}};
                    for (std::size_t t = 0; t + 1 < p.arrows.size() && !v.empty(); ++t) v = act(A, p.arrows[t], v);
                    for (const auto& [b, x] : v) {
                        auto it = col_of.find({p.arrows.back(), b});
                        if (it == col_of.end()) continue;
                        row[it->second.second] += c * x;
                    }
                }
                rows[key].push_back(std::move(row));
            }
        }
        level.emplace_back();
        for (auto& [key, cands] : groups) {
            auto sol = solve_block(cands.size(), rows[key]);
            std::map<int, int> new_index;
            std::vector<int> fc = sol.free_cols;
            std::sort(fc.begin(), fc.end(), [&](int x, int y) { return order.less(cands[x].path.arrows, cands[y].path.arrows); });
            for (int f : fc) {
                BasisElement e;
                e.src = key.first;
                e.dst = key.second;
                e.path = cands[f].path;
                new_index[f] = static_cast<int>(A.basis.size());
                level[L].push_back(static_cast<int>(A.basis.size()));
                A.basis.push_back(e);
            }
            for (std::size_t c = 0; c < cands.size(); ++c) {
                SparseVec v;
                auto fit = new_index.find(static_cast<int>(c));
                if (fit != new_index.end()) {
                    v.emplace_back(fit->second, Rational(1));
                } else {
                    for (const auto& [f, x] : sol.pivot_expr.at(static_cast<int>(c))) v.emplace_back(new_index.at(f), x);
                    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                }
                if (!v.empty()) A.arrow_action[{cands[c].arrow, cands[c].lower}] = std::move(v);
            }
        }
        if (level[L].empty()) break;
    }
    return A;
}

FDAlgebra build_bruteforce(const Quiver& q, const std::vector<Relation>& rels)
{
    LabelOrder order(q);
    std::map<std::pair<int, int>, std::vector<Path>> paths;
    std::size_t total = 0;
    std::function<void(Path&)> dfs = [&](Path& p) {
        paths[{p.src, p.dst}].push_back(p);
        if (++total > 200000) throw std::runtime_error("too many paths for the ungraded reduction");
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].src != p.dst) continue;
            int old = p.dst;
            p.arrows.push_back(static_cast<int>(a));
            p.dst = q.arrows[a].dst;
            dfs(p);
            p.arrows.pop_back();
            p.dst = old;
        }
    };
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        Path p{static_cast<int>(v), static_cast<int>(v), {}};
        dfs(p);
    }
    auto concat = [&](const Path& first, const Path& second) {
        Path r = first;
        r.arrows.insert(r.arrows.end(), second.arrows.begin(), second.arrows.end());
        r.dst = second.dst;
        return r;
    };
    FDAlgebra A;
    A.quiver = q;
    A.relations = rels;
    std::map<Path, SparseVec> reduction;
    std::vector<std::pair<std::pair<int, int>, std::vector<Path>>> blocks(paths.begin(), paths.end());
    // idempotents first
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        BasisElement e;
        e.src = e.dst = static_cast<int>(v);
        e.path = Path{e.src, e.dst, {}};
        e.idempotent = true;
        e.name = "e_" + q.vertices[v];
        A.basis.push_back(e);
    }
    for (auto& [key, plist] : blocks) {
        std::sort(plist.begin(), plist.end(), [&](const Path& x, const Path& y) {
            if (x.length() != y.length()) return x.length() > y.length();
            return order.less(y.arrows, x.arrows);
        });
        std::map<Path, int> col;
        for (std::size_t c = 0; c < plist.size(); ++c) col[plist[c]] = static_cast<int>(c);
        std::vector<std::map<int, Rational>> rows;
        for (const auto& r : rels) {
            const Path& rp = r.terms.front().second;
            auto pre = paths.find({key.first, rp.src});
            auto post = paths.find({rp.dst, key.second});
            if (pre == paths.end() || post == paths.end()) continue;
            for (const auto& qq : pre->second)
                for (const auto& pp : post->second) {
                    std::map<int, Rational> row;
                    for (const auto& [c, t] : r.terms) row[col.at(concat(concat(qq, t), pp))] += c;
                    rows.push_back(std::move(row));
                }
        }
        auto sol = solve_block(plist.size(), rows);
        std::map<int, int> new_index;
        for (int f : sol.free_cols) {
            if (plist[f].length() == 0) {
                new_index[f] = plist[f].src;
                continue;
            }
            BasisElement e;
            e.src = key.first;
            e.dst = key.second;
            e.path = plist[f];
            new_index[f] = static_cast<int>(A.basis.size());
            A.basis.push_back(e);
        }
        for (std::size_t c = 0; c < plist.size(); ++c) {
            SparseVec v;
            auto fit = new_index.find(static_cast<int>(c));
            if (fit != new_index.end())
                v.emplace_back(fit->second, Rational(1));
            else
                for (const auto& [f, x] : sol.pivot_expr.at(static_cast<int>(c))) v.emplace_back(new_index.at(f), x);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            reduction[plist[c]] = std::move(v);
        }
    }
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        if (!A.basis[v].idempotent) throw std::logic_error("idempotent lost");
    for (std::size_t b = 0; b < A.basis.size(); ++b)
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
            if (q.arrows[a].src != A.basis[b].dst) continue;
            Path p = *A.basis[b].path;
            p.arrows.push_back(static_cast<int>(a));
            p.dst = q.arrows[a].dst;
            const auto& v = reduction.at(p);
            if (!v.empty()) A.arrow_action[{static_cast<int>(a), static_cast<int>(b)}] = v;
        }
    return A;
}

}  // namespace

FDAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& rels)
{
    if (!q.acyclic()) throw CyclicQuiver("quiver has a directed cycle");
    check_relations(q, rels);
    FDAlgebra A = homogeneous(rels) ? build_graded(q, rels) : build_bruteforce(q, rels);
    A.finalize();
    fill_products(A);
    return A;
}

FDAlgebra make_abstract(const std::vector<std::string>& vertices, std::vector<BasisElement> basis,
                        const std::map<std::pair<int, int>, SparseVec>& mult)
{
    FDAlgebra A;
    A.quiver.vertices = vertices;
    A.basis = std::move(basis);
    A.finalize();
    for (const auto& [k, v] : mult) A.set_product(k.first, k.second, v);
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        int e = A.idempotent(static_cast<int>(v));
        for (std::size_t b = 0; b < A.basis.size(); ++b) {
            if (A.basis[b].dst == static_cast<int>(v)) A.set_product(e, static_cast<int>(b), {{static_cast<int>(b), Rational(1)}});
            if (A.basis[b].src == static_cast<int>(v)) A.set_product(static_cast<int>(b), e, {{static_cast<int>(b), Rational(1)}});
        }
    }
    for (auto [s, t, c] : irreducible_arrows(A))
        for (int k = 0; k < c; ++k)
            A.quiver.arrows.push_back({s, t, vertices[s] + "->" + vertices[t] + (c > 1 ? "#" + std::to_string(k) : "")});
    return A;
}

AlgebraElement basis_vector(const FDAlgebra& A, int i)
{
    AlgebraElement v(A.dim());
    v.at(i) = 1;
    return v;
}

AlgebraElement multiply(const FDAlgebra& A, const AlgebraElement& a, const AlgebraElement& b)
{
    if (a.size() != A.dim() || b.size() != A.dim()) throw std::invalid_argument("multiply: wrong length");
    AlgebraElement out(A.dim());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            Rational c = a[i] * b[j];
            for (const auto& [k, x] : A.product(static_cast<int>(i), static_cast<int>(j))) out[k] += c * x;
        }
    }
    return out;
}

SparseVec reduce_path(const FDAlgebra& A, const Path& p)
{
    SparseVec v{{A.idempotent(p.src), Rational(1)}};
    for (int a : p.arrows) {
        v = act(A, a, v);
        if (v.empty()) break;
    }
    return v;
}

std::vector<int> hom_projectives(const FDAlgebra& A, int i, int j) { return A.block(i, j); }

FDAlgebra opposite(const FDAlgebra& A)
{
    FDAlgebra B;
    B.quiver.vertices = A.quiver.vertices;
    for (const auto& a : A.quiver.arrows) B.quiver.arrows.push_back({a.dst, a.src, a.label});
    auto rev = [](const Path& p) {
        Path r{p.dst, p.src, std::vector<int>(p.arrows.rbegin(), p.arrows.rend())};
        return r;
    };
    for (const auto& r : A.relations) {
        Relation o;
        for (const auto& [c, p] : r.terms) o.terms.emplace_back(c, rev(p));
        B.relations.push_back(o);
    }
    for (const auto& b : A.basis) {
        BasisElement o = b;
        std::swap(o.src, o.dst);
        if (b.path) o.path = rev(*b.path);
        B.basis.push_back(o);
    }
    B.grid = A.grid;
    B.finalize();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            const auto& v = A.product(static_cast<int>(j), static_cast<int>(i));
            if (!v.empty()) B.set_product(static_cast<int>(i), static_cast<int>(j), v);
        }
    for (std::size_t a = 0; a < A.quiver.arrows.size(); ++a) {
        const auto& ar = A.quiver.arrows[a];
        SparseVec va = reduce_path(A, Path{ar.src, ar.dst, {static_cast<int>(a)}});
        for (std::size_t b = 0; b < A.dim(); ++b) {
            std::map<int, Rational> acc;
            for (const auto& [k, x] : va) axpy(acc, A.product(static_cast<int>(b), k), x);
            auto v = to_sparse(acc);
            if (!v.empty()) B.arrow_action[{static_cast<int>(a), static_cast<int>(b)}] = std::move(v);
        }
    }
    return B;
}

std::vector<std::tuple<int, int, int>> irreducible_arrows(const FDAlgebra& A)
{
    std::vector<std::tuple<int, int, int>> out;
    int nv = static_cast<int>(A.num_vertices());
    for (int s = 0; s < nv; ++s)
        for (int t = 0; t < nv; ++t) {
            if (s == t) continue;
            const auto& blk = A.block(t, s);
            if (blk.empty()) continue;
            std::map<int, int> pos;
            for (std::size_t k = 0; k < blk.size(); ++k) pos[blk[k]] = static_cast<int>(k);
            std::vector<std::vector<Rational>> rows;
            for (int y = 0; y < nv; ++y) {
                if (y == s || y == t) continue;
                for (int i : A.block(t, y))
                    for (int j : A.block(y, s)) {
                        const auto& v = A.product(i, j);
                        if (v.empty()) continue;
                        std::vector<Rational> row(blk.size());
                        for (const auto& [k, x] : v) row[pos.at(k)] = x;
                        rows.push_back(std::move(row));
                    }
            }
            RatMatrix m(rows.size(), blk.size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < blk.size(); ++c) m(r, c) = rows[r][c];
            int irr = static_cast<int>(blk.size() - rank(m));
            if (irr > 0) out.emplace_back(s, t, irr);
        }
    return out;
}

bool multiplicity_free(const FDAlgebra& A)
{
    int nv = static_cast<int>(A.num_vertices());
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b)
            if (A.block(a, b).size() > 1) return false;
    return true;
}

Normalization normalize_signs(const FDAlgebra& A, const Grid& grid)
{
    if (!multiplicity_free(A)) throw NotMultiplicityFree("normalize_signs needs multiplicity-free Hom spaces");
    Normalization N;
    int nv = static_cast<int>(A.num_vertices());
    auto hom = [&](int x, int z) -> int {
        const auto& b = A.block(z, x);
        return b.empty() ? -1 : b[0];
    };
    auto coeff = [&](int x, int y, int z) -> Rational {
        int a = hom(x, y), b = hom(y, z), c = hom(x, z);
        if (a < 0 || b < 0 || c < 0) return 0;
        for (const auto& [k, v] : A.product(b, a))
            if (k == c) return v;
        return 0;
    };
    std::map<std::pair<int, int>, Rational> edge_scale;
    auto scale_of = [&](int x, int z) -> Rational {
        auto it = edge_scale.find({x, z});
        return it == edge_scale.end() ? Rational(1) : it->second;
    };
    std::map<std::pair<int, int>, int> at;
    for (const auto& [v, rc] : grid) at[rc] = v;
    std::vector<std::pair<int, int>> corners;
    for (const auto& [rc, v] : at) corners.push_back(rc);
    std::sort(corners.begin(), corners.end());
    for (auto [r, c] : corners) {
        auto f01 = at.find({r, c + 1}), f10 = at.find({r + 1, c}), f11 = at.find({r + 1, c + 1});
        if (f01 == at.end() || f10 == at.end() || f11 == at.end()) continue;
        int p00 = at.at({r, c}), p01 = f01->second, p10 = f10->second, p11 = f11->second;
        // cyclic corner order around the square
        int cyc[4] = {p00, p01, p11, p10};
        int src = -1;
        for (int k = 0; k < 4; ++k) {
            int x = cyc[k], y1 = cyc[(k + 1) % 4], y2 = cyc[(k + 3) % 4], z = cyc[(k + 2) % 4];
            if (hom(x, y1) >= 0 && hom(x, y2) >= 0 && hom(y1, z) >= 0 && hom(y2, z) >= 0) {
                src = k;
                break;
            }
        }
        if (src < 0) continue;
        int x = cyc[src], y1 = cyc[(src + 1) % 4], y2 = cyc[(src + 3) % 4], z = cyc[(src + 2) % 4];
        Rational a = scale_of(x, y1) * scale_of(y1, z) * coeff(x, y1, z);
        Rational b = scale_of(x, y2) * scale_of(y2, z) * coeff(x, y2, z);
        if (a == b) continue;
        if (sgn(a) == 0 || sgn(b) == 0) {
            std::ostringstream os;
            os << "square at (" << r << "," << c << ") with corners " << A.quiver.vertices[x] << " -> "
               << A.quiver.vertices[z] << " has a zero composite on one side only";
            throw SignNormalizationFailure(os.str());
        }
        // the top edge joins p10 and p11; exactly one of them is an intermediate corner
        std::pair<int, int> top = hom(p10, p11) >= 0 ? std::make_pair(p10, p11) : std::make_pair(p11, p10);
        bool on_first = (top == std::make_pair(x, y1)) || (top == std::make_pair(y1, z));
        Rational f = on_first ? b / a : a / b;
        edge_scale[top] = scale_of(top.first, top.second) * f;
        if (f == -1)
            ++N.flips;
        else
            ++N.rescales;
    }
    // canonical basis: generators keep their scale, composites are products along a factorisation
    std::function<Rational(int, int)> hat_scale = [&](int x, int z) -> Rational {
        auto it = N.scale.find({x, z});
        if (it != N.scale.end()) return it->second;
        Rational s = 0;
        for (int y = 0; y < nv && sgn(s) == 0; ++y) {
            if (y == x || y == z || hom(x, y) < 0 || hom(y, z) < 0) continue;
            Rational c = coeff(x, y, z);
            if (sgn(c) != 0) s = hat_scale(x, y) * hat_scale(y, z) * c;
        }
        if (sgn(s) == 0) s = scale_of(x, z);
        N.scale[{x, z}] = s;
        N.hat[{x, z}] = hom(x, z);
        return s;
    };
    for (int x = 0; x < nv; ++x)
        for (int z = 0; z < nv; ++z)
            if (x != z && hom(x, z) >= 0) hat_scale(x, z);
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y) {
            if (y == x || hom(x, y) < 0) continue;
            for (int z = 0; z < nv; ++z) {
                if (z == x || z == y || hom(y, z) < 0) continue;
                Rational c = coeff(x, y, z);
                if (sgn(c) == 0) continue;
                Rational k = N.scale.at({x, y}) * N.scale.at({y, z}) * c / N.scale.at({x, z});
                if (k != 1) {
                    std::ostringstream os;
                    os << "composite " << A.quiver.vertices[x] << " -> " << A.quiver.vertices[y] << " -> "
                       << A.quiver.vertices[z] << " equals " << k.get_str() << " times the canonical generator";
                    throw SignNormalizationFailure(os.str());
                }
                N.nonzero.insert({x, y, z});
            }
        }
    return N;
}

VerifyReport presented_iso_check(const FDAlgebra& A, const FDAlgebra& B, const std::vector<int>& vmap,
                                 const std::string& name)
{
    VerifyReport rep;
    rep.name = name;
    int nv = static_cast<int>(A.num_vertices());
    if (static_cast<int>(B.num_vertices()) != nv || static_cast<int>(vmap.size()) != nv) {
        rep.fail("vertex counts differ: " + std::to_string(nv) + " vs " + std::to_string(B.num_vertices()));
        return rep;
    }
    {
        std::vector<int> seen(nv, 0);
        for (int v : vmap) {
            if (v < 0 || v >= nv || seen[v]++) {
                rep.fail("vertex map is not a bijection");
                return rep;
            }
        }
    }
    if (!multiplicity_free(A) || !multiplicity_free(B))
        throw NotMultiplicityFree("presented_iso_check needs multiplicity-free algebras");
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b) {
            std::size_t da = A.block(a, b).size(), db = B.block(vmap[a], vmap[b]).size();
            if (da != db)
                rep.fail("dim e_" + A.quiver.vertices[a] + " A e_" + A.quiver.vertices[b] + " = " + std::to_string(da) +
                         " but image block has dim " + std::to_string(db));
        }
    Grid gb;
    for (const auto& [v, rc] : A.grid) gb[vmap[v]] = rc;
    Normalization na, nb;
    try {
        na = normalize_signs(A, A.grid);
    } catch (const SignNormalizationFailure& e) {
        rep.fail(std::string("first algebra: ") + e.what());
        return rep;
    }
    try {
        nb = normalize_signs(B, gb);
    } catch (const SignNormalizationFailure& e) {
        rep.fail(std::string("second algebra: ") + e.what());
        return rep;
    }
    std::set<std::tuple<int, int, int>> mapped;
    for (auto [x, y, z] : na.nonzero) mapped.insert({vmap[x], vmap[y], vmap[z]});
    for (const auto& t : mapped)
        if (!nb.nonzero.count(t)) {
            auto [x, y, z] = t;
            rep.fail("composite through " + B.quiver.vertices[y] + " from " + B.quiver.vertices[x] + " to " +
                     B.quiver.vertices[z] + " vanishes only in the second algebra");
        }
    for (const auto& t : nb.nonzero)
        if (!mapped.count(t)) {
            auto [x, y, z] = t;
            rep.fail("composite through " + B.quiver.vertices[y] + " from " + B.quiver.vertices[x] + " to " +
                     B.quiver.vertices[z] + " vanishes only in the first algebra");
        }
    return rep;
}

std::string path_string(const FDAlgebra& A, const BasisElement& b)
{
    if (!b.path) return b.name;
    if (b.path->arrows.empty()) return "e_" + A.quiver.vertices[b.src];
    std::string s;
    for (int a : b.path->arrows) {
        if (!s.empty()) s += ".";
        s += A.quiver.arrows[a].label;
    }
    return s;
}

}  // namespace fsk
