#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace specind {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct EqConstraint {
  std::vector<double> coeffs;
  double rhs = 0.0;
};

/// minimize c.x subject to A x = b and lower <= x <= upper (infinite bounds allowed).
struct LinearProgram {
  std::vector<double> objective;
  std::vector<EqConstraint> constraints;
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t num_vars() const noexcept { return objective.size(); }
  /// Appends a variable and returns its index; existing rows get a zero coefficient.
  std::size_t add_var(double cost, double lo, double hi);
  void add_eq(std::vector<double> coeffs, double rhs);
};

struct LpSolution {
  std::vector<double> values;
  double objective = 0.0;
  bool vertex = true;
  std::size_t pivots = 0;
};

/// Two-phase dense primal simplex with Bland's rule.
/// Throws Infeasible, Unbounded, or NumericalInstability when an equality residual
/// exceeds 1e-9 relative to the row magnitude sum_j |a_j x_j|.
LpSolution solve_lp(const LinearProgram& lp);

/// Plain-text dump (format described in docs/lp_format.md). Indices listed in
/// `binaries` are tagged as integer variables.
std::string dump_lp(const LinearProgram& lp, std::span<const std::size_t> binaries = {});

}  // namespace specind
