#pragma once

#include "fsk/algebra.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fsk {

struct DivideSegment {
    int a = 0, b = 0;
    int branch = 0;
};

// combinatorial divide: planar embedding given by a rotation system of segment ids
struct Divide {
    int branches = 0;
    std::vector<int> endpoint;                  // 1 for boundary endpoints, 0 for double points
    std::vector<std::vector<int>> rotation;     // incident segments, counter-clockwise
    std::vector<DivideSegment> segments;
    std::vector<std::pair<double, double>> xy;  // drawing coordinates

    std::size_t num_vertices() const { return endpoint.size(); }
    std::vector<int> double_points() const;
    void check() const;
};

struct InvalidDivide : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ColoringFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvariantMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Divide gn_divide(int n);

struct Region {
    std::vector<int> vertices;  // double points on the boundary, in traversal order
    std::vector<int> segments;
    int sign = 0;  // -1 negative, +1 positive
};

struct SignedRegions {
    std::vector<Region> regions;
};

// inner faces by face traversal, checkerboard signs, lowest region negative
SignedRegions regions_and_signs(const Divide& d);

struct ACQuiverData {
    FDAlgebra algebra;
    std::vector<std::string> kind;  // saddle | negative | positive
    std::vector<int> feature;       // double point vertex or region index
    std::vector<std::pair<double, double>> xy;
};

ACQuiverData acampo_quiver(const Divide& d);
// gamma_tilde(n) vertex of each quiver vertex of acampo_quiver(gn_divide(n))
std::vector<int> gn_vertex_labels(int n, const ACQuiverData& q);

struct MilnorCounts {
    int double_points = 0, negative = 0, positive = 0, milnor_number = 0;
};

MilnorCounts milnor_counts(const Divide& d);
// closed-form counts for the g_n family
MilnorCounts gn_formula_counts(int n);

struct FibreInvariants {
    int milnor_number = 0, euler_characteristic = 0, punctures = 0, genus = 0;
};

FibreInvariants fibre_invariants(const Divide& d);

VerifyReport iyama_surface_check(int n);
FDAlgebra iyama_cycle_algebra(int n);
bool composition_nonzero(int I1, int J1, int I2, int J2, int I3, int J3);

}  // namespace fsk
