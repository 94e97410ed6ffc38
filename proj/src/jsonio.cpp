#include "vertexlab/jsonio.hpp"

#include <cmath>
#include <cstdlib>

#include "vertexlab/errors.hpp"

namespace vxl {

json complex_to_json(cplx v) { return json::array({v.real(), v.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DomainError("complex values must be [re, im] arrays");
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im))
    throw DomainError("complex components must be finite");
  return {re, im};
}

cplx parse_complex(const std::string& s) {
  if (s.empty()) throw DomainError("empty complex literal");
  const auto comma = s.find(',');
  if (comma != std::string::npos) {
    return {std::strtod(s.substr(0, comma).c_str(), nullptr),
            std::strtod(s.substr(comma + 1).c_str(), nullptr)};
  }
  if (s.back() == 'i' || s.back() == 'I') {
    // split re and im at the last sign that is not an exponent sign
    const std::string body = s.substr(0, s.size() - 1);
    for (std::size_t pos = body.size(); pos-- > 1;) {
      const char c = body[pos];
      if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
        const double re = std::strtod(body.substr(0, pos).c_str(), nullptr);
        std::string imtxt = body.substr(pos);
        if (imtxt == "+" || imtxt == "-") imtxt += "1";
        return {re, std::strtod(imtxt.c_str(), nullptr)};
      }
    }
    return {0.0, std::strtod(body.c_str(), nullptr)};
  }
  return {std::strtod(s.c_str(), nullptr), 0.0};
}

json params_to_json(const Params& p) {
  json j;
  j["k"] = p.k;
  j["n"] = p.n;
  j["q"] = complex_to_json(p.q);
  j["hbar"] = complex_to_json(p.hbar);
  j["hbar_sqrt"] = complex_to_json(p.hbar_sqrt);
  j["a"] = json::array();
  for (const auto& a : p.a) j["a"].push_back(complex_to_json(a));
  j["z"] = complex_to_json(p.z);
  return j;
}

Params params_from_json(const json& j) {
  Params p;
  try {
    p.k = j.at("k").get<int>();
    p.n = j.at("n").get<int>();
    p.q = complex_from_json(j.at("q"));
    p.hbar = complex_from_json(j.at("hbar"));
    p.hbar_sqrt = complex_from_json(j.at("hbar_sqrt"));
    for (const auto& e : j.at("a")) p.a.push_back(complex_from_json(e));
    p.z = complex_from_json(j.at("z"));
    if (j.contains("genericity_window")) p.genericity_window = j["genericity_window"].get<int>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed params JSON: ") + e.what());
  }
  return p;
}

QFunctionConfig qconfig_from_json(const json& j) {
  QFunctionConfig cfg;
  if (j.contains("truncation_floor")) cfg.truncation_floor = j["truncation_floor"].get<double>();
  if (j.contains("max_terms")) cfg.max_terms = j["max_terms"].get<int>();
  if (j.contains("zero_tol")) cfg.zero_tol = j["zero_tol"].get<double>();
  if (j.contains("zero_scan_window")) cfg.zero_scan_window = j["zero_scan_window"].get<int>();
  if (!(cfg.truncation_floor > 0.0) || cfg.truncation_floor >= 1.0)
    throw DomainError("qseries.truncation_floor must lie in (0, 1)");
  if (cfg.max_terms < 1) throw DomainError("qseries.max_terms must be positive");
  return cfg;
}

}  // namespace vxl
