#pragma once

#include "fsk/algebra.hpp"

#include <string>
#include <vector>

namespace fsk {

enum class Orientation { linear, alternating };

std::string gt_label(int I, int J);
std::string q_label(int i, int j);

// vertex order: J outer, I inner
int gt_index(int n, int I, int J);
int q_index(int n, int i, int j);

FDAlgebra gamma_tilde(int n);
FDAlgebra gamma(int n);

Quiver a_quiver(int m, Orientation o);

struct IntervalModule {
    int m = 1;
    int a = 1;
    int b = 1;
    bool operator==(const IntervalModule& o) const { return m == o.m && a == o.a && b == o.b; }
};

std::vector<IntervalModule> interval_modules(int m);
// basis of Hom(X, Y) as per-vertex scalars indexed 1..m (entry 0 unused)
std::vector<RatVec> hom_interval_basis(const IntervalModule& X, const IntervalModule& Y);
int hom_intervals(const IntervalModule& X, const IntervalModule& Y);

FDAlgebra auslander_oracle(int m);
// position of the interval matching Q_ij inside auslander_oracle(n-2), listed in gamma(n) vertex order
std::vector<int> gamma_to_auslander(int n);

}  // namespace fsk
