#include "fsk/emit.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

namespace fsk {

namespace {

const Json& need(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string fmt(double x)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << x;
    return os.str();
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string dot_id(const std::string& s)
{
    std::string r = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') r += '\\';
        r += c;
    }
    return r + "\"";
}

}  // namespace

Json algebra_json(const FDAlgebra& A)
{
    Json j;
    j["vertices"] = A.quiver.vertices;
    j["arrows"] = Json::array();
    for (const auto& a : A.quiver.arrows)
        j["arrows"].push_back({{"src", A.quiver.vertices[a.src]}, {"dst", A.quiver.vertices[a.dst]}, {"label", a.label}});
    j["relations"] = Json::array();
    for (const auto& r : A.relations) {
        Json rel = Json::array();
        for (const auto& [c, p] : r.terms) {
            Json path = Json::array();
            for (int a : p.arrows) path.push_back(A.quiver.arrows[a].label);
            rel.push_back({{"coeff", to_string(c)}, {"path", path}});
        }
        j["relations"].push_back(rel);
    }
    j["dim"] = A.dim();
    Json basis = Json::array();
    for (const auto& b : A.basis)
        basis.push_back({{"name", path_string(A, b)}, {"src", A.quiver.vertices[b.src]}, {"dst", A.quiver.vertices[b.dst]}});
    j["basis"] = basis;
    return j;
}

FDAlgebra algebra_from_json(const Json& j)
{
    Quiver q;
    for (const auto& v : need(j, "vertices")) q.add_vertex(v.get<std::string>());
    for (const auto& a : need(j, "arrows")) {
        int s = q.vertex(need(a, "src").get<std::string>());
        int t = q.vertex(need(a, "dst").get<std::string>());
        if (s < 0 || t < 0) throw FormatError("arrow endpoint is not a vertex");
        q.add_arrow(s, t, need(a, "label").get<std::string>());
    }
    std::vector<Relation> rels;
    if (j.contains("relations"))
        for (const auto& rj : j.at("relations")) {
            Relation r;
            for (const auto& tj : rj) {
                Path p;
                for (const auto& lj : need(tj, "path")) {
                    int a = q.arrow(lj.get<std::string>());
                    if (a < 0) throw FormatError("unknown arrow " + lj.get<std::string>());
                    if (!p.arrows.empty() && q.arrows[p.arrows.back()].dst != q.arrows[a].src)
                        throw FormatError("relation path does not compose");
                    if (p.arrows.empty()) p.src = q.arrows[a].src;
                    p.arrows.push_back(a);
                    p.dst = q.arrows[a].dst;
                }
                if (p.arrows.empty()) throw FormatError("empty relation path");
                r.terms.emplace_back(parse_rational(tj.value("coeff", std::string("1"))), p);
            }
            if (!r.terms.empty()) rels.push_back(r);
        }
    return build_algebra(q, rels);
}

std::string quiver_dot(const FDAlgebra& A, const std::string& name)
{
    std::ostringstream os;
    os << "digraph " << dot_id(name) << " {\n  rankdir=LR;\n";
    for (std::size_t v = 0; v < A.num_vertices(); ++v) {
        os << "  " << dot_id(A.quiver.vertices[v]);
        auto it = A.grid.find(static_cast<int>(v));
        if (it != A.grid.end())
            os << " [pos=\"" << it->second.second << "," << it->second.first << "!\"]";
        os << ";\n";
    }
    for (const auto& a : A.quiver.arrows)
        os << "  " << dot_id(A.quiver.vertices[a.src]) << " -> " << dot_id(A.quiver.vertices[a.dst])
           << " [label=" << dot_id(a.label) << "];\n";
    for (std::size_t r = 0; r < A.relations.size(); ++r) {
        os << "  // relation " << r << ":";
        for (const auto& [c, p] : A.relations[r].terms) {
            os << " " << to_string(c) << "*";
            for (std::size_t k = 0; k < p.arrows.size(); ++k) os << (k ? "." : "") << A.quiver.arrows[p.arrows[k]].label;
        }
        os << "\n";
    }
    os << "}\n";
    return os.str();
}

Json divide_json(const Divide& d)
{
    Json j;
    j["branches"] = d.branches;
    j["double_points"] = d.double_points();
    j["endpoint"] = d.endpoint;
    j["rotation"] = d.rotation;
    Json segs = Json::array();
    for (const auto& s : d.segments) segs.push_back({{"a", s.a}, {"b", s.b}, {"branch", s.branch}});
    j["segments"] = segs;
    Json xy = Json::array();
    for (const auto& [x, y] : d.xy) xy.push_back({x, y});
    j["xy"] = xy;
    return j;
}

Divide divide_from_json(const Json& j)
{
    Divide d;
    try {
        d.branches = need(j, "branches").get<int>();
        d.rotation = need(j, "rotation").get<std::vector<std::vector<int>>>();
        for (const auto& s : need(j, "segments"))
            d.segments.push_back({need(s, "a").get<int>(), need(s, "b").get<int>(), need(s, "branch").get<int>()});
        for (const auto& p : need(j, "xy")) d.xy.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad divide json: ") + e.what());
    }
    d.endpoint.assign(d.rotation.size(), 0);
    for (std::size_t v = 0; v < d.rotation.size(); ++v) d.endpoint[v] = d.rotation[v].size() == 1 ? 1 : 0;
    if (j.contains("endpoint") && j.at("endpoint").get<std::vector<int>>() != d.endpoint)
        throw FormatError("endpoint flags disagree with the rotation system");
    if (j.contains("double_points") && j.at("double_points").get<std::vector<int>>() != d.double_points())
        throw FormatError("double_points disagree with the rotation system");
    d.check();
    return d;
}

std::string divide_svg(const Divide& d)
{
    double minx = 1e9, maxx = -1e9, miny = 1e9, maxy = -1e9;
    for (const auto& [x, y] : d.xy) {
        minx = std::min(minx, x), maxx = std::max(maxx, x);
        miny = std::min(miny, y), maxy = std::max(maxy, y);
    }
    const double s = 60, pad = 40;
    auto X = [&](double x) { return pad + (x - minx) * s; };
    auto Y = [&](double y) { return pad + (maxy - y) * s; };
    double w = 2 * pad + (maxx - minx) * s, h = 2 * pad + (maxy - miny) * s;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    auto regions = regions_and_signs(d);
    for (const auto& r : regions.regions) {
        os << "<polygon fill=\"" << (r.sign < 0 ? "#c6dbef" : "#fdd0a2") << "\" stroke=\"none\" points=\"";
        for (int v : r.vertices) os << fmt(X(d.xy[v].first)) << "," << fmt(Y(d.xy[v].second)) << " ";
        os << "\"/>\n";
        double cx = 0, cy = 0;
        for (int v : r.vertices) cx += d.xy[v].first, cy += d.xy[v].second;
        cx /= r.vertices.size(), cy /= r.vertices.size();
        os << "<text x=\"" << fmt(X(cx)) << "\" y=\"" << fmt(Y(cy) + 4) << "\" font-size=\"12\" text-anchor=\"middle\">"
           << (r.sign < 0 ? "-" : "+") << "</text>\n";
    }
    for (const auto& g : d.segments)
        os << "<line x1=\"" << fmt(X(d.xy[g.a].first)) << "\" y1=\"" << fmt(Y(d.xy[g.a].second)) << "\" x2=\""
           << fmt(X(d.xy[g.b].first)) << "\" y2=\"" << fmt(Y(d.xy[g.b].second)) << "\" stroke=\""
           << kPalette[g.branch % 8] << "\" stroke-width=\"2\"/>\n";
    for (std::size_t v = 0; v < d.num_vertices(); ++v)
        if (!d.endpoint[v])
            os << "<circle cx=\"" << fmt(X(d.xy[v].first)) << "\" cy=\"" << fmt(Y(d.xy[v].second))
               << "\" r=\"3\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

Json arcs_json(const ArcCollection& c)
{
    Json j;
    j["n"] = c.n;
    j["provenance"] = c.provenance;
    Json pairs = Json::array();
    for (const auto& p : c.pairs)
        pairs.push_back({{"tag", p.tag()}, {"arcs", {{p.first.first, p.first.second}, {p.second.first, p.second.second}}}});
    j["pairs"] = pairs;
    return j;
}

std::string arcs_svg(const ArcCollection& c, const std::string& caption)
{
    const double R = 150, cx = 180, cy = 180;
    auto point = [&](double pos, double rad) {
        double t = -std::numbers::pi / 2 + 2 * std::numbers::pi * pos / c.n;
        return std::pair{cx + rad * std::cos(t), cy + rad * std::sin(t)};
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"360\" height=\"380\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << R << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int s = 0; s < c.n; ++s) {
        auto [x, y] = point(s, R);
        os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"4\" fill=\"black\"/>\n";
        auto [lx, ly] = point(s + 0.5, R + 14);
        os << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly + 4) << "\" font-size=\"12\" text-anchor=\"middle\">" << s
           << "</text>\n";
    }
    auto arcs = place_arcs(c.n, c.arcs());
    std::map<ArcLabel, const Arc*> by_label;
    for (const auto& a : arcs) by_label[a.label] = &a;
    for (std::size_t k = 0; k < c.pairs.size(); ++k) {
        for (const auto& lab : {c.pairs[k].first, c.pairs[k].second}) {
            const Arc& a = *by_label.at(lab);
            double p0 = a.e0.segment + a.e0.offset.get_d(), p1 = a.e1.segment + a.e1.offset.get_d();
            auto [x0, y0] = point(p0, R);
            auto [x1, y1] = point(p1, R);
            os << "<path d=\"M " << fmt(x0) << " " << fmt(y0) << " Q " << cx << " " << cy << " " << fmt(x1) << " "
               << fmt(y1) << "\" fill=\"none\" stroke=\"" << kPalette[k % 8] << "\" stroke-width=\"1.5\"/>\n";
        }
    }
    os << "<text x=\"10\" y=\"370\" font-size=\"12\">" << (caption.empty() ? c.provenance : caption) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

Json trace_json(const CombingTrace& t)
{
    Json j;
    j["n"] = t.n;
    j["start"] = arcs_json(t.start);
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back(
            {{"kind", s.kind}, {"indices", s.indices}, {"triangle", s.triangle}, {"shift_delta", s.shift_delta}});
    j["steps"] = steps;
    j["end"] = arcs_json(t.end);
    j["shifts"] = t.shifts;
    return j;
}

Json element_json(const FDAlgebra& A, const Elt& e)
{
    Json j = Json::array();
    for (const auto& [b, c] : e) {
        const auto& be = A.basis[b];
        Json path = Json::array();
        if (be.path)
            for (int a : be.path->arrows) path.push_back(A.quiver.arrows[a].label);
        j.push_back({{"coeff", to_string(c)},
                     {"basis", path_string(A, be)},
                     {"src", A.quiver.vertices[be.src]},
                     {"path", path}});
    }
    return j;
}

Elt element_from_json(const FDAlgebra& A, const Json& j)
{
    std::map<int, Rational> acc;
    for (const auto& t : j) {
        Rational c = parse_rational(t.value("coeff", std::string("1")));
        SparseVec v;
        if (t.contains("path") && !t.at("path").empty()) {
            Path p;
            for (const auto& lj : t.at("path")) {
                int a = A.quiver.arrow(lj.get<std::string>());
                if (a < 0) throw FormatError("unknown arrow " + lj.get<std::string>());
                if (p.arrows.empty()) p.src = A.quiver.arrows[a].src;
                else if (A.quiver.arrows[p.arrows.back()].dst != A.quiver.arrows[a].src)
                    throw FormatError("element path does not compose");
                p.arrows.push_back(a);
                p.dst = A.quiver.arrows[a].dst;
            }
            v = reduce_path(A, p);
        } else if (t.contains("basis")) {
            std::string name = t.at("basis").get<std::string>();
            int found = -1;
            for (std::size_t b = 0; b < A.dim(); ++b)
                if (path_string(A, A.basis[b]) == name) found = static_cast<int>(b);
            if (found < 0) throw FormatError("unknown basis element " + name);
            v = {{found, Rational(1)}};
        } else {
            throw FormatError("element term needs 'path' or 'basis'");
        }
        for (const auto& [b, x] : v) acc[b] += c * x;
    }
    Elt e;
    for (const auto& [b, x] : acc)
        if (x != 0) e.emplace_back(b, x);
    return e;
}

Json complex_json(const ProjComplex& K)
{
    const FDAlgebra& A = *K.alg;
    Json j;
    j["lo"] = K.lo;
    j["degrees"] = Json::array();
    for (int p = K.lo; p <= K.hi(); ++p) j["degrees"].push_back(p);
    Json terms = Json::array();
    for (const auto& t : K.terms) {
        Json vs = Json::array();
        for (int v : t) vs.push_back(A.quiver.vertices[v]);
        terms.push_back(vs);
    }
    j["terms"] = terms;
    Json d = Json::array();
    for (int p = K.lo; p < K.hi(); ++p) {
        Json m = Json::array();
        for (std::size_t r = 0; r < K.at(p + 1).size(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < K.at(p).size(); ++c) row.push_back(element_json(A, K.diff(p, r, c)));
            m.push_back(row);
        }
        d.push_back(m);
    }
    j["d"] = d;
    return j;
}

ProjComplex complex_from_json(std::shared_ptr<const FDAlgebra> A, const Json& j)
{
    int lo = need(j, "lo").get<int>();
    std::vector<std::vector<int>> terms;
    for (const auto& tj : need(j, "terms")) {
        std::vector<int> t;
        for (const auto& vj : tj) {
            int v = A->quiver.vertex(vj.get<std::string>());
            if (v < 0) throw FormatError("unknown vertex " + vj.get<std::string>());
            t.push_back(v);
        }
        terms.push_back(t);
    }
    std::vector<EltMatrix> d;
    if (j.contains("d")) {
        const Json& dj = j.at("d");
        if (dj.size() > terms.size()) throw FormatError("too many differentials");
        for (std::size_t k = 0; k < dj.size(); ++k) {
            std::size_t rows = k + 1 < terms.size() ? terms[k + 1].size() : 0;
            if (dj[k].size() != rows) throw FormatError("differential " + std::to_string(k) + " has the wrong row count");
            EltMatrix m(rows, std::vector<Elt>(terms[k].size()));
            for (std::size_t r = 0; r < rows; ++r) {
                if (dj[k][r].size() != terms[k].size())
                    throw FormatError("differential " + std::to_string(k) + " has the wrong column count");
                for (std::size_t c = 0; c < terms[k].size(); ++c) m[r][c] = element_from_json(*A, dj[k][r][c]);
            }
            d.push_back(m);
        }
    }
    try {
        return make_complex(std::move(A), lo, terms, d);
    } catch (const InvalidComplex& e) {
        throw FormatError(std::string("complex rejected: ") + e.what());
    }
}

Json witness_json(const std::vector<WitnessStep>& w)
{
    Json j = Json::array();
    for (const auto& s : w)
        j.push_back({{"kind", s.kind},
                     {"source", s.source.str()},
                     {"projective", {s.h, s.k}},
                     {"degree", s.degree},
                     {"cones", s.cones},
                     {"triangle", s.triangle}});
    return j;
}

Json report_json(const VerifyReport& r)
{
    return {{"check", r.name}, {"status", status_name(r.status)}, {"details", r.details}, {"seconds", r.seconds}};
}

}  // namespace fsk
