#include "fsk/check.hpp"
#include "fsk/complexes.hpp"
#include "fsk/disk.hpp"
#include "fsk/divides.hpp"
#include "fsk/emit.hpp"
#include "fsk/families.hpp"
#include "fsk/singularity.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace fsk;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

unsigned env_seed()
{
    const char* s = std::getenv("FSK_SEED");
    if (!s || !*s) return 0;
    try {
        return static_cast<unsigned>(std::stoul(s));
    } catch (const std::exception&) {
        throw UsageError(std::string("FSK_SEED is not an unsigned integer: ") + s);
    }
}

void write_out(const std::string& out, const std::string& text)
{
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

FDAlgebra gamma_variant(int n, const std::string& variant)
{
    if (variant == "tilde") return gamma_tilde(n);
    if (variant == "grid") return gamma(n);
    if (variant == "oracle") return auslander_oracle(n - 2);
    throw UsageError("unknown variant " + variant);
}

std::vector<std::string> t_names(int n)
{
    std::vector<std::string> names;
    for (const auto& x : t_indices(n)) names.push_back(x.str());
    return names;
}

Json tcomplex_json(int n)
{
    auto G = std::make_shared<const FDAlgebra>(gamma(n));
    auto T = t_complex(G, n);
    auto names = t_names(n);
    Json j;
    j["n"] = n;
    j["algebra"] = algebra_json(*G);
    j["summands"] = Json::array();
    for (std::size_t k = 0; k < T.size(); ++k) {
        Json c = complex_json(T[k]);
        c["name"] = names[k];
        j["summands"].push_back(c);
    }
    return j;
}

Json divide_summary(const Divide& d)
{
    auto c = milnor_counts(d);
    auto f = fibre_invariants(d);
    return {{"double_points", c.double_points},
            {"negative_regions", c.negative},
            {"positive_regions", c.positive},
            {"milnor_number", c.milnor_number},
            {"euler_characteristic", f.euler_characteristic},
            {"punctures", f.punctures},
            {"genus", f.genus}};
}

Json singular_json(int n, double eps, double tol, unsigned seed)
{
    Json j;
    j["n"] = n;
    j["g"] = g_poly(n).str();
    j["lift_identity"] = lift_identity_check(n);
    double res = factorization_check(n, tol, seed);
    j["factorization_residual"] = res;
    j["seed"] = seed;
    auto cp = critical_points_check(n, eps, tol);
    j["eps"] = eps;
    j["tol"] = tol;
    j["root_sign"] = cp.root_sign;
    j["candidates"] = cp.candidates;
    j["confirmed"] = cp.confirmed;
    j["rejected_diagonal"] = cp.rejected_diagonal;
    j["max_confirmed_gradient"] = cp.max_confirmed_norm;
    j["min_rejected_gradient"] = cp.min_rejected_norm;
    return j;
}

std::string emit_object(const std::string& object, int n, const std::string& format, const std::string& collection)
{
    auto bad = [&]() -> std::string { throw UsageError("object " + object + " has no " + format + " form"); };
    if (object == "gamma" || object == "gamma_tilde") {
        FDAlgebra A = object == "gamma" ? gamma(n) : gamma_tilde(n);
        if (format == "json") return dump(algebra_json(A));
        if (format == "dot") return quiver_dot(A, object + "_" + std::to_string(n));
        return bad();
    }
    if (object == "divide") {
        Divide d = gn_divide(n);
        if (format == "json") return dump(divide_json(d));
        if (format == "dot") return quiver_dot(acampo_quiver(d).algebra, "acampo_" + std::to_string(n));
        if (format == "svg") return divide_svg(d);
        return bad();
    }
    if (object == "arcs") {
        ArcCollection c = collection == "iyama" ? iyama_arcs(n) : acampo_arcs(n);
        if (format == "json") return dump(arcs_json(c));
        if (format == "svg") return arcs_svg(c);
        if (format == "dot") return quiver_dot(endo_quiver(c), collection + "_" + std::to_string(n));
        return bad();
    }
    if (object == "trace") {
        if (format == "json") return dump(trace_json(comb(n)));
        return bad();
    }
    if (object == "tcomplex") {
        if (format == "json") return dump(tcomplex_json(n));
        return bad();
    }
    throw UsageError("unknown object " + object);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fsk: exact verification of the g_n algebras, complexes, arcs and divides"};
    app.require_subcommand(1);

    int n = 0;
    std::string out;
    auto n_opt = [&](CLI::App* sub, bool required = true) {
        auto* o = sub->add_option("--n", n, "size parameter n (n >= 3)")->check(CLI::Range(3, 64));
        if (required) o->required();
    };

    auto* g = app.add_subcommand("gamma", "emit gamma_tilde(n), gamma(n) or the Auslander oracle");
    std::string variant = "tilde", format = "json";
    n_opt(g);
    g->add_option("--variant", variant, "tilde | grid | oracle")->check(CLI::IsMember({"tilde", "grid", "oracle"}));
    g->add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
    g->add_option("--out", out, "output file (default stdout)");

    auto* dv = app.add_subcommand("divide", "divide of g_n or a user divide: counts, quiver, figure");
    std::string in, emit = "json";
    n_opt(dv, false);
    dv->add_option("--in", in, "divide JSON file instead of g_n");
    dv->add_option("--emit", emit, "json | dot | svg")->check(CLI::IsMember({"json", "dot", "svg"}));
    dv->add_option("--out", out, "output file (default stdout)");

    auto* cb = app.add_subcommand("comb", "run the combing algorithm");
    std::string trace_file, svg_dir;
    n_opt(cb);
    cb->add_option("--trace", trace_file, "write the trace JSON here");
    cb->add_option("--emit-svg", svg_dir, "directory for one SVG per step");

    auto* tl = app.add_subcommand("tilting", "build T_n; optionally verify it and write the generation witness");
    bool verify = false;
    n_opt(tl);
    tl->add_flag("--verify", verify, "check Ext vanishing, generation and End(T_n)");
    tl->add_option("--trace", trace_file, "write the generation witness JSON here");
    tl->add_option("--out", out, "write the complexes JSON here");

    auto* ex = app.add_subcommand("ext", "Ext table between two complexes of projectives");
    std::string alg_file, k_file, l_file;
    ex->add_option("--algebra", alg_file, "quiver JSON")->required();
    ex->add_option("--K", k_file, "complex JSON")->required();
    ex->add_option("--L", l_file, "complex JSON")->required();

    auto* sg = app.add_subcommand("singular", "polynomial checks for g_n");
    double eps = 1.0, tol = 1e-8;
    std::string report = "json";
    n_opt(sg);
    sg->add_option("--eps", eps, "Morsification parameter");
    sg->add_option("--tol", tol, "gradient tolerance")->check(CLI::PositiveNumber);
    sg->add_option("--report", report, "json | text")->check(CLI::IsMember({"json", "text"}));

    auto* ck = app.add_subcommand("check", "run every cross-verification for 3 <= n <= n-max");
    int n_max = 6;
    bool as_json = false;
    ck->add_option("--n-max", n_max, "largest n")->check(CLI::Range(3, 64));
    ck->add_flag("--json", as_json, "print the full report as JSON");

    auto* em = app.add_subcommand("emit", "emit one object");
    std::string object, collection = "acampo";
    n_opt(em);
    em->add_option("object", object, "gamma | gamma_tilde | divide | arcs | trace | tcomplex")->required();
    em->add_option("--format", format, "json | dot | svg");
    em->add_option("--collection", collection, "arcs: acampo | iyama")->check(CLI::IsMember({"acampo", "iyama"}));
    em->add_option("--out", out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        unsigned seed = env_seed();
        if (*g) {
            FDAlgebra A = gamma_variant(n, variant);
            write_out(out, format == "dot" ? quiver_dot(A, variant + "_" + std::to_string(n)) : dump(algebra_json(A)));
        } else if (*dv) {
            if (in.empty() == (n == 0)) throw UsageError("divide needs exactly one of --n and --in");
            Divide d = in.empty() ? gn_divide(n) : divide_from_json(read_json(in));
            if (emit == "svg") {
                write_out(out, divide_svg(d));
            } else if (emit == "dot") {
                write_out(out, quiver_dot(acampo_quiver(d).algebra, "acampo"));
            } else {
                Json j = divide_json(d);
                j["summary"] = divide_summary(d);
                write_out(out, dump(j));
            }
        } else if (*cb) {
            auto t = comb(n);
            auto rep = replay_trace(t);
            if (!trace_file.empty()) write_out(trace_file, dump(trace_json(t)));
            if (!svg_dir.empty()) {
                fs::create_directories(svg_dir);
                auto states = trace_states(t);
                for (std::size_t k = 0; k < states.size(); ++k) {
                    std::ostringstream name;
                    name << "step_" << std::setw(4) << std::setfill('0') << k << ".svg";
                    std::string caption = k == 0 ? "start" : std::to_string(k) + ": " + t.steps[k - 1].kind;
                    write_out((fs::path(svg_dir) / name.str()).string(), arcs_svg(states[k], caption));
                }
            }
            Json s = {{"n", n}, {"steps", t.steps.size()}, {"replay", rep.ok()}, {"lex_ordered", verify_lex_order(t)}};
            std::cout << dump(s);
            if (!rep.ok()) return 1;
        } else if (*tl) {
            auto G = std::make_shared<const FDAlgebra>(gamma(n));
            if (!out.empty()) write_out(out, dump(tcomplex_json(n)));
            if (!trace_file.empty()) write_out(trace_file, dump(witness_json(generation_witness(G, n))));
            Json s = {{"n", n}, {"summands", t_indices(n).size()}};
            bool ok = true;
            if (verify) {
                auto rep = is_tilting(n);
                auto E = end_algebra(t_complex(G, n), t_names(n));
                auto iso = presented_iso_check(E, gamma_tilde(n), t_to_gamma_tilde(n), "End(T) vs gamma_tilde");
                s["tilting"] = report_json(rep);
                s["end_iso"] = report_json(iso);
                ok = rep.ok() && iso.ok();
            }
            std::cout << dump(s);
            if (!ok) return 1;
        } else if (*ex) {
            auto A = std::make_shared<const FDAlgebra>(algebra_from_json(read_json(alg_file)));
            ProjComplex K = complex_from_json(A, read_json(k_file));
            ProjComplex L = complex_from_json(A, read_json(l_file));
            Json t = Json::object();
            for (const auto& [deg, dim] : ext_table(K, L)) t[std::to_string(deg)] = dim;
            std::cout << dump(Json{{"ext", t}});
        } else if (*sg) {
            Json j = singular_json(n, eps, tol, seed);
            if (report == "json") {
                std::cout << dump(j);
            } else {
                for (const auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
            }
        } else if (*ck) {
            auto reps = run_checks(n_max);
            bool ok = true;
            Json failures = Json::array();
            for (const auto& r : reps) {
                ok = ok && r.ok();
                if (!r.ok()) failures.push_back(report_json(r));
                if (!as_json)
                    std::cout << status_name(r.status) << "  " << r.name << "  (" << std::fixed << std::setprecision(3)
                              << r.seconds << " s)\n";
            }
            if (as_json) {
                Json all = Json::array();
                for (const auto& r : reps) all.push_back(report_json(r));
                std::cout << dump(Json{{"n_max", n_max}, {"passed", ok}, {"checks", all}});
            }
            if (!ok) {
                std::cerr << dump(Json{{"failures", failures}});
                return 1;
            }
        } else if (*em) {
            if (format.empty()) format = "json";
            write_out(out, emit_object(object, n, format, collection));
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidDivide& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
