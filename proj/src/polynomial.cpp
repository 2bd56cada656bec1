#include "specind/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "specind/error.hpp"

namespace specind {

double CoeffPolynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int CoeffPolynomial::degree(double tol) const noexcept {
  double scale = 0.0;
  for (double a : coeffs) scale = std::max(scale, std::abs(a));
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (std::abs(coeffs[static_cast<std::size_t>(i)]) > tol * scale && coeffs[static_cast<std::size_t>(i)] != 0.0) return i;
  }
  return -1;
}

std::vector<double> divided_differences(const MeshPolynomial& p) {
  if (p.mesh.size() != p.values.size() || p.mesh.empty()) {
    throw Error(ErrorKind::InvalidArgument, "mesh and values must have equal non-zero length");
  }
  std::vector<double> table = p.values;
  std::vector<double> leading{table[0]};
  const std::size_t n = table.size();
  for (std::size_t order = 1; order < n; ++order) {
    for (std::size_t i = 0; i + order < n; ++i) {
      table[i] = (table[i + 1] - table[i]) / (p.mesh[i + order] - p.mesh[i]);
    }
    leading.push_back(table[0]);
  }
  return leading;
}

std::vector<double> divided_difference_row(std::span<const double> mesh, std::size_t order) {
  std::vector<double> row(mesh.size(), 0.0);
  for (std::size_t i = 0; i <= order; ++i) {
    double denom = 1.0;
    for (std::size_t j = 0; j <= order; ++j) {
      if (j != i) denom *= mesh[i] - mesh[j];
    }
    row[i] = 1.0 / denom;
  }
  return row;
}

int mesh_degree(const MeshPolynomial& p, double rel_tol) {
  const std::size_t n = p.size();
  double value_scale = 0.0;
  for (double v : p.values) value_scale = std::max(value_scale, std::abs(v));
  if (value_scale == 0.0) return -1;
  for (std::size_t order = n - 1; order >= 1; --order) {
    auto row = divided_difference_row(p.mesh, order);
    double sum = 0.0;
    double magnitude = 0.0;
    for (std::size_t i = 0; i <= order; ++i) {
      sum += row[i] * p.values[i];
      magnitude += std::abs(row[i]) * value_scale;
    }
    if (std::abs(sum) > rel_tol * magnitude) return static_cast<int>(order);
  }
  return 0;
}

CoeffPolynomial mesh_to_coeffs(const MeshPolynomial& p) {
  const auto dd = divided_differences(p);
  // Horner on the Newton form: P = dd[m] ; P = P * (x - t_{j}) + dd[j].
  CoeffPolynomial result{{dd.back()}};
  for (std::size_t j = dd.size() - 1; j-- > 0;) {
    std::vector<double> next(result.coeffs.size() + 1, 0.0);
    for (std::size_t i = 0; i < result.coeffs.size(); ++i) {
      next[i + 1] += result.coeffs[i];
      next[i] -= p.mesh[j] * result.coeffs[i];
    }
    next[0] += dd[j];
    result.coeffs = std::move(next);
  }
  const int deg = result.degree(1e-12);
  result.coeffs.resize(static_cast<std::size_t>(std::max(deg, 0)) + 1);
  return result;
}

MeshPolynomial to_mesh(const CoeffPolynomial& p, std::span<const double> mesh) {
  MeshPolynomial out;
  out.mesh.assign(mesh.begin(), mesh.end());
  out.values.reserve(mesh.size());
  for (double t : mesh) out.values.push_back(p(t));
  return out;
}

CoeffPolynomial operator+(const CoeffPolynomial& a, const CoeffPolynomial& b) {
  CoeffPolynomial out{std::vector<double>(std::max(a.coeffs.size(), b.coeffs.size()), 0.0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

CoeffPolynomial operator*(const CoeffPolynomial& a, const CoeffPolynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  CoeffPolynomial out{std::vector<double>(a.coeffs.size() + b.coeffs.size() - 1, 0.0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

CoeffPolynomial operator*(double s, const CoeffPolynomial& a) {
  CoeffPolynomial out = a;
  for (double& c : out.coeffs) c *= s;
  return out;
}

}  // namespace specind
