#pragma once

#include <string>

#include "json.hpp"
#include "vertexlab/params.hpp"
#include "vertexlab/qseries.hpp"

namespace vxl {

using nlohmann::json;

// complex numbers travel as 2-arrays [re, im] of finite doubles
json complex_to_json(cplx v);
cplx complex_from_json(const json& j);

// accepts "0.3", "0.3+0.1i", "0.3-0.1i", "0.3,0.1"
cplx parse_complex(const std::string& s);

json params_to_json(const Params& p);
Params params_from_json(const json& j);

QFunctionConfig qconfig_from_json(const json& j);

}  // namespace vxl
