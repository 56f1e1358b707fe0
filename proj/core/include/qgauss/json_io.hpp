#pragma once

#include <string>

#include <json.hpp>

#include "qgauss/gaussian.hpp"

namespace qg {

using Json = nlohmann::json;

Json complex_to_json(const Complex& z);          // [re, im]
Complex complex_from_json(const Json& j);        // [re, im] or bare number
Json matrix_to_json(const ComplexMatrix& m);     // row-major nested arrays
ComplexMatrix matrix_from_json(const Json& j);
Json tensor_op_to_json(const TensorOperator& w); // w[a][b][c][d]
TensorOperator tensor_op_from_json(const Json& j);

Json spec_to_json(const GaussianSpec& spec);
GaussianSpec spec_from_json(const Json& j);
GaussianSpec load_spec(const std::string& path);

/// Stable text form: keys in sorted order, floats as %.17g, trailing newline.
std::string dump_json(const Json& j);
void write_json(const std::string& path, const Json& j);

}  // namespace qg
