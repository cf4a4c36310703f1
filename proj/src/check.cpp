#include "fsk/check.hpp"

#include "fsk/complexes.hpp"
#include "fsk/disk.hpp"
#include "fsk/divides.hpp"
#include "fsk/families.hpp"
#include "fsk/singularity.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

namespace fsk {

namespace {

std::vector<int> identity_map(std::size_t n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::vector<int> inverse(const std::vector<int>& m)
{
    std::vector<int> r(m.size(), -1);
    for (std::size_t k = 0; k < m.size(); ++k) r.at(m[k]) = static_cast<int>(k);
    return r;
}

VerifyReport timed(int n, const std::string& name, const std::string& anchor, const std::function<void(VerifyReport&)>& body)
{
    VerifyReport r;
    r.name = "n=" + std::to_string(n) + " " + name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.ok()) r.details.insert(r.details.begin(), "contradicts: " + anchor);
    return r;
}

void absorb(VerifyReport& r, const VerifyReport& sub)
{
    if (!sub.ok()) r.merge(sub);
}

}  // namespace

std::vector<VerifyReport> check_suite(int n)
{
    std::vector<VerifyReport> out;
    const int mu = (n - 1) * (n - 2) / 2;

    out.push_back(timed(n, "auslander_oracle", "gamma_n is the Auslander algebra of A_{n-2}", [&](VerifyReport& r) {
        absorb(r, presented_iso_check(gamma(n), auslander_oracle(n - 2), gamma_to_auslander(n), "gamma vs oracle"));
    }));

    out.push_back(timed(n, "combing", "combing carries A'Campo arcs to Iyama arcs in lex order", [&](VerifyReport& r) {
        auto t = comb(n);
        absorb(r, replay_trace(t));
        if (!verify_lex_order(t)) r.fail("terminal collection is not lexicographic");
        auto want = iyama_arcs(n).pairs, got = t.end.pairs;
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want != got) r.fail("terminal tag multiset differs from the Iyama collection");
    }));

    out.push_back(timed(n, "composition_rule", "cycle composition rule reproduces gamma_n", [&](VerifyReport& r) {
        FDAlgebra G = gamma(n);
        absorb(r, presented_iso_check(G, iyama_cycle_algebra(n), identity_map(G.num_vertices()), "cycles vs gamma"));
    }));

    out.push_back(timed(n, "disk_acampo", "endomorphism quiver of the A'Campo arcs is gamma_tilde_n", [&](VerifyReport& r) {
        auto c = acampo_arcs(n);
        if (!auroux_generation_check(c)) r.fail("A'Campo arcs do not cut the disk into generating pieces");
        absorb(r, presented_iso_check(endo_quiver(c), gamma_tilde(n), acampo_vertex_map(n), "B_n vs gamma_tilde"));
    }));

    out.push_back(timed(n, "disk_iyama", "endomorphism quiver of the Iyama arcs is gamma_n", [&](VerifyReport& r) {
        auto c = iyama_arcs(n);
        if (!auroux_generation_check(c)) r.fail("Iyama arcs do not cut the disk into generating pieces");
        absorb(r, presented_iso_check(endo_quiver(c), gamma(n), iyama_vertex_map(n), "Iyama arcs vs gamma"));
    }));

    out.push_back(timed(n, "divide_counts", "vertex counts of the g_n divide", [&](VerifyReport& r) {
        auto c = milnor_counts(gn_divide(n));
        auto f = gn_formula_counts(n);
        if (c.double_points != f.double_points || c.negative != f.negative || c.positive != f.positive)
            r.fail("counted " + std::to_string(c.double_points) + "/" + std::to_string(c.negative) + "/" +
                   std::to_string(c.positive) + ", formula " + std::to_string(f.double_points) + "/" +
                   std::to_string(f.negative) + "/" + std::to_string(f.positive));
        if (c.milnor_number != mu) r.fail("Milnor number " + std::to_string(c.milnor_number) + " != " + std::to_string(mu));
    }));

    out.push_back(timed(n, "divide_quiver", "A'Campo quiver of the g_n divide is gamma_tilde_n", [&](VerifyReport& r) {
        auto q = acampo_quiver(gn_divide(n));
        absorb(r, presented_iso_check(gamma_tilde(n), q.algebra, inverse(gn_vertex_labels(n, q)), "divide vs gamma_tilde"));
    }));

    out.push_back(timed(n, "fibre_invariants", "Euler characteristic, punctures and genus of the Milnor fibre", [&](VerifyReport& r) {
        auto f = fibre_invariants(gn_divide(n));
        int genus = n % 2 ? (n - 1) * (n - 3) / 4 : (n - 2) * (n - 2) / 4;
        if (f.euler_characteristic != n * (3 - n) / 2) r.fail("chi = " + std::to_string(f.euler_characteristic));
        if (f.punctures != (n + 1) / 2) r.fail("punctures = " + std::to_string(f.punctures));
        if (f.genus != genus) r.fail("genus = " + std::to_string(f.genus));
    }));

    out.push_back(timed(n, "singularity", "lift identity, factorisation and critical points of g_n", [&](VerifyReport& r) {
        if (!lift_identity_check(n)) r.fail("lift identity fails");
        double res = factorization_check(n, 1e-9);
        if (!(res < 1e-9)) r.fail("factorisation residual " + std::to_string(res));
        auto cp = critical_points_check(n, 1.0, 1e-8);
        if (cp.confirmed != mu) r.fail("confirmed " + std::to_string(cp.confirmed) + " critical points");
        if (cp.rejected_diagonal != n - 1) r.fail("rejected " + std::to_string(cp.rejected_diagonal) + " diagonal points");
    }));

    out.push_back(timed(n, "surface", "gluing of the Iyama surface", [&](VerifyReport& r) { absorb(r, iyama_surface_check(n)); }));

    out.push_back(timed(n, "tilting", "T_n is tilting with endomorphism algebra gamma_tilde_n", [&](VerifyReport& r) {
        absorb(r, is_tilting(n));
        auto G = std::make_shared<const FDAlgebra>(gamma(n));
        auto idx = t_indices(n);
        std::vector<std::string> names;
        for (const auto& x : idx) names.push_back(x.str());
        auto E = end_algebra(t_complex(G, n), names);
        absorb(r, presented_iso_check(E, gamma_tilde(n), t_to_gamma_tilde(n), "End(T) vs gamma_tilde"));
    }));

    return out;
}

std::vector<VerifyReport> run_checks(int n_max)
{
    std::vector<VerifyReport> all;
    for (int n = 3; n <= n_max; ++n) {
        auto part = check_suite(n);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace fsk
