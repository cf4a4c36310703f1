#pragma once

#include "fsk/linalg.hpp"
#include "fsk/report.hpp"

#include <map>
#include <set>
#include <tuple>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fsk {

struct Arrow {
    int src = 0;
    int dst = 0;
    std::string label;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex(const std::string& label) const;
    int arrow(const std::string& label) const;
    int add_vertex(const std::string& label);
    int add_arrow(int src, int dst, const std::string& label);
    bool acyclic() const;
};

// arrows in traversal order; an empty path sits at src == dst
struct Path {
    int src = 0;
    int dst = 0;
    std::vector<int> arrows;

    bool operator==(const Path& o) const { return src == o.src && dst == o.dst && arrows == o.arrows; }
    bool operator<(const Path& o) const;
    std::size_t length() const { return arrows.size(); }
};

struct Relation {
    std::vector<std::pair<Rational, Path>> terms;
};

struct BasisElement {
    int src = 0;
    int dst = 0;
    std::optional<Path> path;
    std::string name;
    bool idempotent = false;
};

using SparseVec = std::vector<std::pair<int, Rational>>;
using AlgebraElement = RatVec;
using Grid = std::map<int, std::pair<int, int>>;

struct CyclicQuiver : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SignNormalizationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotMultiplicityFree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class FDAlgebra {
public:
    Quiver quiver;
    std::vector<Relation> relations;
    std::vector<BasisElement> basis;
    Grid grid;

    std::size_t dim() const { return basis.size(); }
    std::size_t num_vertices() const { return quiver.vertices.size(); }
    int idempotent(int v) const { return idem_.at(v); }

    // b_i * b_j: b_j first, then b_i
    const SparseVec& product(int i, int j) const;
    void set_product(int i, int j, SparseVec v);

    // basis indices of e_i A e_j, i.e. elements running from j to i
    const std::vector<int>& block(int i, int j) const;

    // a . b_j for each arrow a, filled by build_algebra
    std::map<std::pair<int, int>, SparseVec> arrow_action;

    void finalize();

private:
    std::map<std::pair<int, int>, SparseVec> mult_;
    std::vector<int> idem_;
    std::vector<std::vector<std::vector<int>>> blocks_;
};

FDAlgebra build_algebra(const Quiver& q, const std::vector<Relation>& rels);

// abstract algebra: vertices, basis with endpoints, structure constants supplied by caller
FDAlgebra make_abstract(const std::vector<std::string>& vertices, std::vector<BasisElement> basis,
                        const std::map<std::pair<int, int>, SparseVec>& mult);

AlgebraElement multiply(const FDAlgebra& A, const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement basis_vector(const FDAlgebra& A, int i);
SparseVec reduce_path(const FDAlgebra& A, const Path& p);

std::vector<int> hom_projectives(const FDAlgebra& A, int i, int j);
FDAlgebra opposite(const FDAlgebra& A);

// irreducible-arrow counts (dim of e_t rad e_s / e_t rad^2 e_s), for display of abstract algebras
std::vector<std::tuple<int, int, int>> irreducible_arrows(const FDAlgebra& A);
bool multiplicity_free(const FDAlgebra& A);

struct Normalization {
    std::map<std::pair<int, int>, int> hat;        // (src, dst) -> basis index
    std::map<std::pair<int, int>, Rational> scale; // hat = scale * basis element
    std::set<std::tuple<int, int, int>> nonzero;   // (x, y, z): hat(y,z) hat(x,y) = hat(x,z)
    int flips = 0;
    int rescales = 0;
};

Normalization normalize_signs(const FDAlgebra& A, const Grid& grid);

VerifyReport presented_iso_check(const FDAlgebra& A, const FDAlgebra& B, const std::vector<int>& vmap,
                                 const std::string& name = "presented_iso");

std::string path_string(const FDAlgebra& A, const BasisElement& b);

}  // namespace fsk
