#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "specind/graph.hpp"
#include "specind/polynomial.hpp"

namespace specind {

inline constexpr double kDefaultGroupingTol = 1e-8;

/// Distinct eigenvalues theta_0 > ... > theta_d with multiplicities, plus the
/// full sorted list lambda_1 >= ... >= lambda_n.
struct Spectrum {
  std::vector<double> distinct;
  std::vector<int> mults;
  std::vector<double> raw;
  std::size_t n = 0;
  /// True when the values come from a closed form rather than an eigensolver.
  bool exact = false;

  int d() const noexcept { return static_cast<int>(distinct.size()) - 1; }
  double theta0() const noexcept { return distinct.front(); }
  double theta_min() const noexcept { return distinct.back(); }

  /// Validates ordering and multiplicities and expands the raw list.
  static Spectrum from_distinct(std::vector<double> distinct, std::vector<int> mults, bool exact = true);

  /// Sum m_i theta_i^p.
  double moment(int p) const noexcept;
  /// (1/n) sum m_i theta_i^2 == theta_0 holds exactly for regular graphs.
  bool looks_regular(double tol = 1e-9) const noexcept;
};

struct PiProducts {
  std::vector<double> pi;
};

struct RegularityReport {
  bool is_regular = false;
  int degree = -1;
  int pwr_level = 1;
  bool is_walk_regular = false;
  bool is_distance_regular = false;
  /// {b_0, ..., b_{D-1}} and {c_1, ..., c_D}; empty unless distance-regular.
  std::vector<int> intersection_b;
  std::vector<int> intersection_c;
  int diameter = 0;
  bool diameter_equals_d = false;
};

struct DiagonalStats {
  double w = 0.0;  // min
  double W = 0.0;  // max
};

/// Dense symmetric eigensolve followed by grouping of raw values whose gap is
/// at most tol * max(1, |theta_0|).
Spectrum spectrum(const Graph& g, double tol = kDefaultGroupingTol);

/// Groups an already computed eigenvalue list (any order).
Spectrum group_eigenvalues(std::vector<double> raw, double tol = kDefaultGroupingTol);

Spectrum exact_family_spectrum(const FamilySpec& spec);

PiProducts pi_products(const Spectrum& s);

RegularityReport classify_regularity(const Graph& g, const Spectrum& s);
RegularityReport classify_regularity(const Graph& g, const Spectrum& s, const DistanceMatrix& dm);

/// Largest l <= max_level such that diag(A^j) is constant for every j <= l.
int pwr_level(const Graph& g, int max_level);

DiagonalStats diagonal_stats(const Graph& g, const CoeffPolynomial& p);

}  // namespace specind
