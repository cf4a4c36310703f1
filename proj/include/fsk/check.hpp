#pragma once

#include "fsk/report.hpp"

#include <vector>

namespace fsk {

// every cross-verification for one n, ordered by check name
std::vector<VerifyReport> check_suite(int n);
std::vector<VerifyReport> run_checks(int n_max);

}  // namespace fsk
