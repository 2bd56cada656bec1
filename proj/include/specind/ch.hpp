#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specind/exact.hpp"
#include "specind/graph.hpp"
#include "specind/polynomial.hpp"
#include "specind/programs.hpp"
#include "specind/spectrum.hpp"

namespace specind {

struct CHConfig {
  MilpConfig milp;
  bool with_exact = false;
  ExactConfig exact;
  double tol = kDefaultGroupingTol;
};

struct CHVerdict {
  int k = 1;
  long inertia_value = 0;  // optimal sign-polynomial count
  long ratio_value = 0;    // floor of the optimal minor-polynomial trace
  double ratio_raw = 0.0;
  bool bounds_equal = false;
  /// Some optimal sign polynomial is an affine image of some optimal minor
  /// polynomial (checked both ways, see the README).
  bool linearly_related = false;
  bool is_ch = false;
  std::optional<int> exact;
  std::optional<bool> is_tight_ch;
  std::string exact_note;  // set when the oracle could not run
  /// Least-squares fit s ~ a f + b of the two certificates.
  double fit_scale = 0.0;
  double fit_residual = 0.0;
  MeshPolynomial sign_poly;
  MeshPolynomial minor_poly;
};

/// Needs a regular k-partially walk-regular graph and 1 <= k < d.
CHVerdict ch_classify(const Graph& g, int k, const CHConfig& cfg = {});

/// Projections of an r-vertex d-clique onto the theta_i eigenspace:
/// barycenter norm S, circumradius R and edge length L.
struct SimplexGeometry {
  double S = 0.0;
  double R = 0.0;
  double L = 0.0;
};

SimplexGeometry simplex_geometry(const Spectrum& s, const PiProducts& pi, int i, int r);

struct MultiplicityCheck {
  int index = 0;
  double required = 0.0;  // pi_0 / pi_i (even i) or (r - 1) pi_0 / pi_i (odd i)
  int actual = 0;
  bool holds = false;
  bool equality = false;
};

struct MultiplicityReport {
  std::vector<MultiplicityCheck> checks;
  bool all_hold = false;
  bool all_equal = false;
  /// Largest r allowed by every odd-index constraint.
  long max_r = 0;
};

MultiplicityReport multiplicity_feasibility(const Spectrum& s, const PiProducts& pi, int r);

/// n (sum pi_0^2 / (m_i pi_i^2))^{-1}.
double spectral_excess(const Spectrum& s, const PiProducts& pi);
/// Average number of vertices at distance d from a vertex.
double mean_excess(const DistanceMatrix& dm, int d);
double mean_excess(const Graph& g);

struct AntipodalVerdict {
  bool antipodal = false;
  int r = 0;
  bool multiplicities_equal = false;
  bool order_identity = false;
  bool distance_regular = false;
  bool classes = false;  // "at distance d or equal" is an equivalence with classes of size r
};

/// Throws NotApplicable when the diameter is below d.
AntipodalVerdict antipodal_check(const Graph& g, const Spectrum& s, const PiProducts& pi);

/// Whether the graph induced on the complement of a maximum independent set
/// is strongly regular; throws NotSRG when g itself is not.
bool srg_tightness_check(const Graph& g, std::span<const Vertex> witness);

}  // namespace specind
