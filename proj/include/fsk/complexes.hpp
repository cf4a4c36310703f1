#pragma once

#include "fsk/algebra.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsk {

using Elt = SparseVec;
using EltMatrix = std::vector<std::vector<Elt>>;  // [row][col]

// g o f for f in Hom(P_a, P_b), g in Hom(P_b, P_c)
Elt compose(const FDAlgebra& A, const Elt& f, const Elt& g);

struct ProjComplex {
    std::shared_ptr<const FDAlgebra> alg;
    int lo = 0;
    std::vector<std::vector<int>> terms;  // terms[p - lo]
    std::vector<EltMatrix> d;             // d[p - lo] : degree p -> p + 1

    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    const std::vector<int>& at(int p) const;
    // entry of d^p, row r of degree p+1, column c of degree p
    const Elt& diff(int p, int r, int c) const;
    bool empty() const;
    std::size_t total_rank() const;
    void check() const;  // d^2 = 0 and entries in the right Hom spaces
};

struct InvalidComplex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IndexConstraintViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotFormalCollection : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WitnessStuck : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ProjComplex make_complex(std::shared_ptr<const FDAlgebra> A, int lo, std::vector<std::vector<int>> terms,
                         std::vector<EltMatrix> d);
ProjComplex stalk(std::shared_ptr<const FDAlgebra> A, int v, int degree = 0);
ProjComplex trim(const ProjComplex& K);
bool same_complex(const ProjComplex& K, const ProjComplex& L);

struct ComplexMorphism {
    ProjComplex src, dst;
    std::map<int, EltMatrix> comp;  // degree p: rows dst.at(p), cols src.at(p)

    const Elt& entry(int p, int r, int c) const;
    bool is_chain_map() const;
};

ComplexMorphism zero_morphism(const ProjComplex& K, const ProjComplex& L);
ComplexMorphism identity_morphism(const ProjComplex& K);
ComplexMorphism compose(const ComplexMorphism& f, const ComplexMorphism& g);  // g o f

ProjComplex shift(const ProjComplex& K, int t);
ProjComplex cone(const ComplexMorphism& u);

struct HomCoord {
    int p, c, r, b;
};

struct HomComplex {
    int qlo = 0, qhi = -1;
    std::map<int, std::vector<HomCoord>> basis;
    std::map<int, RatMatrix> d;  // d[q] : Hom^q -> Hom^{q+1}

    std::size_t dim(int q) const;
};

HomComplex hom_complex(const ProjComplex& K, const ProjComplex& L);
int ext(const ProjComplex& K, const ProjComplex& L, int t);
std::map<int, int> ext_table(const ProjComplex& K, const ProjComplex& L);

// degree-0 cocycles give anti-chain maps under the Hom-complex sign rule; these convert
ComplexMorphism cocycle_to_chain_map(const ProjComplex& K, const ProjComplex& L, const HomComplex& H, const RatVec& v);
RatVec chain_map_to_cocycle(const HomComplex& H, const ComplexMorphism& f);

// representatives of a basis of Ext^0(K, L)
std::vector<ComplexMorphism> ext0_basis(const ProjComplex& K, const ProjComplex& L);

// induced map Ext^t(Y, Z) -> Ext^t(X, Z) along f : X -> Y, returned as its rank
int pullback_rank(const ComplexMorphism& f, const ProjComplex& Z, int t);

// Gaussian elimination of invertible differential entries; preserves homotopy type
ProjComplex minimize(const ProjComplex& K);
// finds s with minimize(K) isomorphic to minimize(L)[s]
std::optional<int> iso_up_to_shift(const ProjComplex& K, const ProjComplex& L);

// tilting complex
struct KIndex {
    int i, j, l, m;
    bool operator<(const KIndex& o) const;
    bool operator==(const KIndex& o) const { return i == o.i && j == o.j && l == o.l && m == o.m; }
    std::string str() const;
};

// P_{hk} as a vertex of gamma(n); -1 for the zero module
int projective_vertex(int n, int h, int k);
void check_k_index(int n, const KIndex& x);
std::vector<KIndex> t_indices(int n);
ProjComplex k_complex(std::shared_ptr<const FDAlgebra> gamma_n, int n, const KIndex& x);
std::vector<ProjComplex> t_complex(std::shared_ptr<const FDAlgebra> gamma_n, int n);

struct WitnessStep {
    std::string kind;  // summand | peel
    KIndex source{};
    int h = 0, k = 0;   // projective reached
    int degree = 0;     // degree it sits in after minimisation
    int cones = 0;      // mapping cones used
    std::string triangle;
};

std::vector<WitnessStep> generation_witness(std::shared_ptr<const FDAlgebra> gamma_n, int n);
VerifyReport replay_witness(std::shared_ptr<const FDAlgebra> gamma_n, int n, const std::vector<WitnessStep>& w);
VerifyReport is_tilting(int n);

FDAlgebra end_algebra(const std::vector<ProjComplex>& collection, const std::vector<std::string>& names);

// vertex of gamma_tilde(n) matching each summand of t_complex(n)
std::vector<int> t_to_gamma_tilde(int n);

}  // namespace fsk
