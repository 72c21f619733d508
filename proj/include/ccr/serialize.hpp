#ifndef CCR_SERIALIZE_HPP
#define CCR_SERIALIZE_HPP

#include <json.hpp>

#include "ccr/cp_maps.hpp"
#include "ccr/symplectic.hpp"

namespace ccr {

using Json = nlohmann::ordered_json;

// Vectors serialize as arrays of rational strings ("3/2"); integer JSON
// numbers are accepted on input. Spaces serialize as {"d": int} with an
// optional "form" matrix. Complex matrices serialize as arrays of rows of
// [re, im] pairs.

Json vector_to_json(const PhaseVector& f);
PhaseVector vector_from_json(const Json& j);

Json gens_to_json(const std::vector<PhaseVector>& gens);
std::vector<PhaseVector> gens_from_json(const Json& j);

Json space_to_json(const SymplecticSpace& space);
SymplecticSpace space_from_json(const Json& j);

Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

Json complex_to_json(std::complex<double> z);

// {"k": int, "unit": matrix, "images": {label: matrix}, "pairs": [[a,b,ab]],
//  "norm_refs": {label: value}} with "pairs"/"norm_refs" optional.
Json sample_to_json(const CpSample& sample);
CpSample sample_from_json(const Json& j);

}  // namespace ccr

#endif
