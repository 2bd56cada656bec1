#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace specind {

/// Polynomial in the monomial basis, ascending degree.
struct CoeffPolynomial {
  std::vector<double> coeffs;

  double operator()(double x) const noexcept;
  /// Degree ignoring trailing coefficients with |a| <= tol * max|a|; -1 for the zero polynomial.
  int degree(double tol = 0.0) const noexcept;
};

/// Polynomial given by its values on a strictly decreasing mesh.
struct MeshPolynomial {
  std::vector<double> mesh;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const noexcept { return values[i]; }
};

/// Leading Newton divided differences f[t_0], f[t_0,t_1], ..., f[t_0,...,t_d].
std::vector<double> divided_differences(const MeshPolynomial& p);

/// Coefficients of f[t_0,...,t_m] as a linear functional of the values:
/// f[t_0,...,t_m] = sum_{i<=m} x_i / prod_{j<=m, j!=i} (t_i - t_j).
std::vector<double> divided_difference_row(std::span<const double> mesh, std::size_t order);

/// Smallest k such that all divided differences of order > k vanish,
/// each measured relative to the magnitude of its own terms.
int mesh_degree(const MeshPolynomial& p, double rel_tol = 1e-9);

/// Newton-form expansion of the interpolating polynomial.
CoeffPolynomial mesh_to_coeffs(const MeshPolynomial& p);
MeshPolynomial to_mesh(const CoeffPolynomial& p, std::span<const double> mesh);

CoeffPolynomial operator+(const CoeffPolynomial& a, const CoeffPolynomial& b);
CoeffPolynomial operator*(const CoeffPolynomial& a, const CoeffPolynomial& b);
CoeffPolynomial operator*(double s, const CoeffPolynomial& a);

}  // namespace specind
