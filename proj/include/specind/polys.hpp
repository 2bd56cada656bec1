#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specind/polynomial.hpp"
#include "specind/spectrum.hpp"

namespace specind {

/// <p, q>_G = (1/n) sum m_i p(theta_i) q(theta_i), on mesh values.
double spectral_inner(const Spectrum& s, std::span<const double> p, std::span<const double> q);

/// Orthogonal family p_0..p_d under the spectral inner product, scaled so
/// that p_i(theta_0) = ||p_i||^2.
struct PredistanceFamily {
  std::vector<CoeffPolynomial> polys;
  std::vector<MeshPolynomial> values;
  std::vector<double> norms;  // ||p_i||^2

  /// q'_k = p_1 + ... + p_k on the mesh.
  MeshPolynomial partial_sum(int k) const;
};

PredistanceFamily predistance_polynomials(const Spectrum& s);

/// H(x) = n prod_{i>=1} (x - theta_i) / (theta_0 - theta_i).
CoeffPolynomial hoffman_polynomial(const Spectrum& s);
MeshPolynomial hoffman_mesh(const Spectrum& s);

/// Closed-form minor polynomial candidate for k in {0, 1, 2, 3, d-1, d}.
struct MinorClosedForm {
  MeshPolynomial poly;
  std::string rule;     // "f0", "mp1", "mp2", "mp4", "mp5", "mp6"
  int selected = -1;    // theta index picked by the rule, -1 if none
  /// k = 3 only: the product f_1 f_2 and whether it equals the exact form.
  std::optional<MeshPolynomial> mp3_product;
  bool mp3_matches = false;
};

/// Largest index i in [1, d-1] with theta_i > -1 (the smallest eigenvalue above -1).
int mp2_index(const Spectrum& s);
/// Smallest theta_i, i in [1, d-2], with theta_i >= -(theta_0^2 + theta_0 theta_d - delta) / (theta_0 (1 + theta_d)).
int mp4_index(const Spectrum& s, double delta);
/// Odd index i minimizing 1 + m_i pi_i / pi_0; ties go to the smaller multiplicity, then the smaller index.
int mp5_index(const Spectrum& s);

MinorClosedForm minor_closed_form(const Spectrum& s, int k, std::optional<double> delta = std::nullopt);

/// Sum m_i f(theta_i).
double spectral_trace(const Spectrum& s, std::span<const double> values);

}  // namespace specind
