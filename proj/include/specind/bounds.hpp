#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specind/graph.hpp"
#include "specind/polynomial.hpp"
#include "specind/polys.hpp"
#include "specind/programs.hpp"
#include "specind/spectrum.hpp"

namespace specind {

enum class BoundMethod {
  Cvetkovic,
  Hoffman,
  InertiaGeneral,
  RatioGeneral,
  PwrInertia,
  PwrRatio,
  Mp2,
  Mp3,
  DminusOneInertiaEven,
  DminusOneInertiaOdd,
  DminusOneRatioOdd,
  DminusOneCorollary,
  Mp5,
  QkInertia,
  QkRatio,
  PdRatio,
  SignRatio,     // n / (1 + s(theta_0)) from a sign polynomial
  MinorInertia,  // sign count of f - tr f / n
  Diameter,      // k >= D
};

std::string_view method_name(BoundMethod m) noexcept;

struct BoundReport {
  BoundMethod method = BoundMethod::Cvetkovic;
  int k = 1;
  double value = 0.0;
  long floor_value = 0;
  std::optional<MeshPolynomial> certificate;
  std::optional<CoeffPolynomial> coeffs;
  bool applicable = true;
  std::string reason;
  std::string detail;  // e.g. the eigenvalue index a rule picked
  bool best = false;
};

/// floor(v) with a small upward tolerance so 7.9999999999 counts as 8.
long bound_floor(double v) noexcept;

BoundReport cvetkovic_bound(std::span<const double> raw);
/// n / (1 - lambda_1 / lambda_n); lambda_n must be negative.
BoundReport hoffman_bound(std::size_t n, double lambda1, double lambdan);
/// Same, after checking that g is regular.
BoundReport hoffman_bound(const Graph& g, const Spectrum& s);

/// min(#{p(lambda_i) >= w(p)}, #{p(lambda_i) <= W(p)}) for deg p <= k.
BoundReport inertia_general(const Graph& g, const Spectrum& s, const CoeffPolynomial& p, int k);
/// n (W(p) - lambda(p)) / (p(lambda_1) - lambda(p)) on a regular graph.
BoundReport ratio_general(const Graph& g, const Spectrum& s, const CoeffPolynomial& p, int k);

/// sum m_i h(s(theta_i)) for a trace-zero mesh polynomial, h(0) = 1.
BoundReport pwr_inertia(const Spectrum& s, const MeshPolynomial& sp, int k = 0);
/// sum m_i f(theta_i) for f(theta_0) = 1 and min_{i>=1} f(theta_i) = 0.
BoundReport pwr_ratio(const Spectrum& s, const MeshPolynomial& f, int k = 0);

struct Transformed {
  MeshPolynomial poly;
  BoundReport bound;
};

/// f = (1 + s) / (1 + s(theta_0)); needs min_{i>=1} s(theta_i) = -1.
Transformed sign_to_minor(const Spectrum& s, const MeshPolynomial& sp);
/// s = (n / tr f) f - 1.
Transformed minor_to_sign(const Spectrum& s, const MeshPolynomial& f);

BoundReport alpha2_bound(const Spectrum& s);
/// delta is the number of closed 3-walks per vertex.
BoundReport alpha3_bound(const Spectrum& s, double delta);

/// The (d-1)-bounds for walk-regular graphs with D = d: even and odd inertia
/// bounds, odd ratio bounds, the corollary summary and the min over odd i.
std::vector<BoundReport> dminus1_bounds(const Spectrum& s, const PiProducts& pi);

/// Sign-count and ratio bounds from q'_k = p_1 + ... + p_k.
std::pair<BoundReport, BoundReport> qk_bounds(const Graph& g, const Spectrum& s, const PredistanceFamily& pd, int k);

/// n (1 + L) / (n + L - p_d(theta_0)) with L = max_{i>=1} p_d(theta_i).
BoundReport pd_ratio_bound(const Spectrum& s, const PredistanceFamily& pd);

struct BoundsConfig {
  double tol = kDefaultGroupingTol;
  bool use_milp = true;
  int milp_max_d = 14;  // larger spectra skip the MILP
  MilpConfig milp;
};

/// Every applicable method for alpha_k; inapplicable ones carry a reason.
/// Reports achieving the smallest floor are flagged best.
std::vector<BoundReport> best_bounds(const Graph& g, int k, const BoundsConfig& cfg = {});
std::vector<BoundReport> best_bounds(const Graph& g, const Spectrum& s, int k, const BoundsConfig& cfg = {});

}  // namespace specind
