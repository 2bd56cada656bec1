#pragma once

#include <cstddef>
#include <vector>

#include "specind/lp.hpp"
#include "specind/polynomial.hpp"
#include "specind/spectrum.hpp"

namespace specind {

/// Optimal minor polynomial: f(theta_0) = 1, f >= 0 on theta_1..theta_d,
/// degree <= k, minimizing sum m_i f(theta_i).
struct MinorSolution {
  MeshPolynomial poly;
  double trace = 0.0;
};

/// Builds the minor LP over x_1..x_d (x_0 = 1 is folded into the right-hand side).
LinearProgram minor_program(const Spectrum& s, int k);
MinorSolution minor_polynomial(const Spectrum& s, int k);

struct MilpConfig {
  double big_m = 0.0;  // 0 selects 1e4 * max_j(1, |theta_j|)^k
  double eps = 1e-4;
  std::size_t node_limit = 2'000'000;
};

struct MilpSolution {
  MeshPolynomial sign_poly;
  CoeffPolynomial coeffs;
  std::vector<int> b;
  int objective = 0;
  std::size_t nodes = 0;
};

/// The relaxation at the root node: y_0..y_d in [-1, 1], b_0..b_d in [0, 1],
/// slacks t_j >= 0 with y_j - M b_j + t_j = -eps, the trace row, and vanishing
/// divided differences of orders k+1..d on y.
struct SignProgram {
  LinearProgram lp;
  std::vector<std::size_t> binaries;
};

SignProgram sign_program(const Spectrum& s, int k, const MilpConfig& cfg = {});
MilpSolution sign_polynomial(const Spectrum& s, int k, const MilpConfig& cfg = {});

/// Orthonormal basis (as rows over theta_0..theta_d) of the span of divided
/// difference functionals of orders k+1..d.
std::vector<std::vector<double>> degree_constraints(const Spectrum& s, int k);

}  // namespace specind
