#pragma once

#include "fsk/complexes.hpp"
#include "fsk/disk.hpp"
#include "fsk/divides.hpp"
#include "fsk/report.hpp"

#include <json.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsk {

using Json = nlohmann::ordered_json;

struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Json algebra_json(const FDAlgebra& A);
// quiver format {"vertices", "arrows", "relations"}; paths list arrow labels in traversal order
FDAlgebra algebra_from_json(const Json& j);
std::string quiver_dot(const FDAlgebra& A, const std::string& name = "Q");

Json divide_json(const Divide& d);
Divide divide_from_json(const Json& j);
std::string divide_svg(const Divide& d);

Json arcs_json(const ArcCollection& c);
std::string arcs_svg(const ArcCollection& c, const std::string& caption = "");

Json trace_json(const CombingTrace& t);

Json element_json(const FDAlgebra& A, const Elt& e);
Elt element_from_json(const FDAlgebra& A, const Json& j);
Json complex_json(const ProjComplex& K);
ProjComplex complex_from_json(std::shared_ptr<const FDAlgebra> A, const Json& j);
Json witness_json(const std::vector<WitnessStep>& w);

Json report_json(const VerifyReport& r);

}  // namespace fsk
