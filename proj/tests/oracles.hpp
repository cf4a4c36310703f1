#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

// Reference computations that share no code with the library.
namespace oracle {

// fraction-free Bareiss elimination over the integers
int rank(std::vector<std::vector<long>> m);

// Hom(M[a,b], M[c,d]) over linearly oriented A_m, arrows v -> v+1
int interval_hom(int a, int b, int c, int d);

// the vertices (I, J), 1 <= I < J <= n-1, J outer, I inner
std::vector<std::pair<int, int>> grid_vertices(int n);

// nonzero Hom between cycles (I, J) and (K, L) of the Iyama collection
bool cycle_hom(int I, int J, int K, int L);

struct Counts {
    int double_points, negative, positive;
};
Counts milnor_counts(int n);
int milnor_number(int n);
int euler_characteristic(int n);
int punctures(int n);
int genus(int n);

// coefficients of x^n + y^n in u = x + y, v = x y, keyed by (deg u, deg v)
std::map<std::pair<int, int>, mpz_class> waring(int n);

}  // namespace oracle
