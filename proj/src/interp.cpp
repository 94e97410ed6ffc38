#include "vertexlab/interp.hpp"

#include <algorithm>
#include <cmath>

#include "vertexlab/errors.hpp"

namespace vxl {

void validate_nodes(const NodeData& d) {
  if (d.nodes.empty()) throw DomainError("interpolation needs at least one node");
  if (d.nodes.size() != d.values.size())
    throw DomainError("nodes and values must have equal length");
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < d.nodes.size(); ++j) {
      const double scale = std::max(std::abs(d.nodes[i]), std::abs(d.nodes[j]));
      if (std::abs(d.nodes[i] - d.nodes[j]) <= 1e-10 * std::max(scale, 1e-300))
        throw DomainError("nodes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                          " coincide");
    }
}

cplx lagrange_eval(const NodeData& d, cplx x) {
  validate_nodes(d);
  const std::size_t n = d.nodes.size();
  cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cplx term = d.values[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      term *= (x - d.nodes[j]) / (d.nodes[i] - d.nodes[j]);
    }
    sum += term;
  }
  return sum;
}

cplx trig_interp_eval(const NodeData& d, int L, cplx x) {
  validate_nodes(d);
  const std::size_t n = d.nodes.size();
  for (const auto& a : d.nodes)
    if (!(std::abs(a) > 0.0)) throw DomainError("trig interpolation needs nonzero nodes");
  cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cplx term = d.values[i] * ipow(x / d.nodes[i], L);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      term *= (cplx(1.0, 0.0) - x / d.nodes[j]) / (cplx(1.0, 0.0) - d.nodes[i] / d.nodes[j]);
    }
    sum += term;
  }
  return sum;
}

cplx elliptic_interp_eval(const NodeData& d, cplx z, cplx x, const Params& p) {
  validate_nodes(d);
  const std::size_t n = d.nodes.size();
  const cplx tz = theta(z, p);
  if (tz == cplx(0.0, 0.0)) throw ResonanceError("elliptic interpolation: z lies in q^Z");
  cplx sum(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cplx term = d.values[i] * theta(z * x / d.nodes[i], p) / tz;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const cplx den = theta(d.nodes[i] / d.nodes[j], p);
      if (den == cplx(0.0, 0.0))
        throw ResonanceError("elliptic interpolation: node ratio a_" + std::to_string(i + 1) +
                             "/a_" + std::to_string(j + 1) + " lies in q^Z");
      term *= theta(x / d.nodes[j], p) / den;
    }
    sum += term;
  }
  return sum;
}

ResonanceFlags resonance_check(const NodeData& d, cplx z, const Params& p) {
  ResonanceFlags out;
  const double tol = 1e-10;
  out.z_resonant = in_q_lattice(z, p.q, p.genericity_window, tol);
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    for (std::size_t j = 0; j < d.nodes.size(); ++j) {
      if (i == j) continue;
      if (in_q_lattice(d.nodes[i] / d.nodes[j], p.q, p.genericity_window, tol))
        out.node_pairs.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    }
  return out;
}

std::vector<cplx> fourier_coefficients(const NodeData& d, int L, int lo, int hi,
                                       int sample_count) {
  const int N = sample_count;
  std::vector<cplx> samples(static_cast<std::size_t>(N));
  constexpr double two_pi = 6.283185307179586476925286766559;
  for (int t = 0; t < N; ++t) {
    const cplx w = std::polar(1.0, two_pi * t / N);
    samples[static_cast<std::size_t>(t)] = trig_interp_eval(d, L, w);
  }
  std::vector<cplx> coeffs;
  coeffs.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) {
    cplx c(0.0, 0.0);
    for (int t = 0; t < N; ++t)
      c += samples[static_cast<std::size_t>(t)] * std::polar(1.0, -two_pi * t * e / N);
    coeffs.push_back(c / static_cast<double>(N));
  }
  return coeffs;
}

double newton_window_residual(const NodeData& d, int L) {
  const int n = static_cast<int>(d.nodes.size());
  const int N = 4 * (std::abs(L) + n + 2);
  // recover exponents in a window wide enough to see leakage on both sides
  const int lo = L - n - 1;
  const int hi = L + 2 * n;
  const auto coeffs = fourier_coefficients(d, L, lo, hi, N);
  double in_max = 0.0;
  double out_max = 0.0;
  for (int e = lo; e <= hi; ++e) {
    const double mag = std::abs(coeffs[static_cast<std::size_t>(e - lo)]);
    if (e >= L && e <= L + n - 1)
      in_max = std::max(in_max, mag);
    else
      out_max = std::max(out_max, mag);
  }
  return out_max / std::max(in_max, 1e-300);
}

}  // namespace vxl
