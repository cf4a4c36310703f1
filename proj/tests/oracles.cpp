#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>

namespace oracle {

int rank(std::vector<std::vector<long>> in)
{
    std::size_t rows = in.size(), cols = rows ? in[0].size() : 0;
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = in[i][j];
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

int interval_hom(int a, int b, int c, int d) { return (c <= a && a <= d && d <= b) ? 1 : 0; }

std::vector<std::pair<int, int>> grid_vertices(int n)
{
    std::vector<std::pair<int, int>> v;
    for (int J = 2; J <= n - 1; ++J)
        for (int I = 1; I < J; ++I) v.emplace_back(I, J);
    return v;
}

bool cycle_hom(int I, int J, int K, int L) { return I <= K && K < J && J <= L; }

Counts milnor_counts(int n)
{
    if (n % 2 == 0) return {n * (n - 2) / 4, n * (n - 2) / 8, (n - 4) * (n - 2) / 8};
    return {(n - 1) * (n - 1) / 4, (n - 1) * (n - 3) / 8, (n - 1) * (n - 3) / 8};
}

int milnor_number(int n) { return (n - 1) * (n - 2) / 2; }
int euler_characteristic(int n) { return n * (3 - n) / 2; }
int punctures(int n) { return (n + 1) / 2; }
int genus(int n) { return n % 2 == 0 ? (n - 2) * (n - 2) / 4 : (n - 1) * (n - 3) / 4; }

std::map<std::pair<int, int>, mpz_class> waring(int n)
{
    std::map<std::pair<int, int>, mpz_class> out;
    if (n == 0) {
        out[{0, 0}] = 2;
        return out;
    }
    for (int k = 0; 2 * k <= n; ++k) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), n - k, k);
        mpz_class c = binom * n / (n - k);
        out[{n - 2 * k, k}] = k % 2 ? -c : c;
    }
    return out;
}

}  // namespace oracle
