#pragma once

#include <span>
#include <vector>

#include "vertexlab/params.hpp"
#include "vertexlab/qseries.hpp"
#include "vertexlab/util.hpp"

namespace vxl {

// Interpolation nodes a_i with values f(a_i); nodes pairwise distinct.
struct NodeData {
  std::vector<cplx> nodes;
  std::vector<cplx> values;
};

// throws DomainError on size mismatch or near-coincident nodes
void validate_nodes(const NodeData& d);

// f(x) = sum_i f(a_i) prod_{j != i} (x - a_j)/(a_i - a_j)
cplx lagrange_eval(const NodeData& d, cplx x);

// f_L(x) = sum_i f(a_i) (x/a_i)^L prod_{j != i} (1 - x/a_j)/(1 - a_i/a_j);
// a Laurent polynomial supported on exponents [L, L+n-1]
cplx trig_interp_eval(const NodeData& d, int L, cplx x);

// f_z(x) = sum_i f(a_i) theta(z x/a_i)/theta(z) prod_{j != i} theta(x/a_j)/theta(a_i/a_j)
cplx elliptic_interp_eval(const NodeData& d, cplx z, cplx x, const Params& p);

struct ResonanceFlags {
  bool z_resonant = false;
  std::vector<std::pair<int, int>> node_pairs;  // 1-based (i, j) with a_i/a_j in q^Z
};

ResonanceFlags resonance_check(const NodeData& d, cplx z, const Params& p);

// Discrete-Fourier coefficient recovery on sample_count-th roots of unity;
// returns coefficients for exponents lo..hi (inclusive, aliased mod N).
std::vector<cplx> fourier_coefficients(const NodeData& d, int L, int lo, int hi,
                                       int sample_count);

// max out-of-window coefficient magnitude relative to the max in-window one,
// window = [L, L+n-1]
double newton_window_residual(const NodeData& d, int L);

}  // namespace vxl
