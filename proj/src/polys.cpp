#include "specind/polys.hpp"

#include <algorithm>
#include <cmath>

#include "specind/error.hpp"

namespace specind {

namespace {

CoeffPolynomial shift_up(const CoeffPolynomial& p) {
  CoeffPolynomial out{std::vector<double>(p.coeffs.size() + 1, 0.0)};
  std::copy(p.coeffs.begin(), p.coeffs.end(), out.coeffs.begin() + 1);
  return out;
}

void axpy(double a, const std::vector<double>& x, std::vector<double>& y) {
  if (y.size() < x.size()) y.resize(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

MeshPolynomial product_of_roots(const Spectrum& s, std::initializer_list<int> roots) {
  MeshPolynomial out{s.distinct, std::vector<double>(s.distinct.size(), 1.0)};
  for (std::size_t j = 0; j < s.distinct.size(); ++j) {
    double num = 1.0;
    double den = 1.0;
    for (int r : roots) {
      num *= s.distinct[j] - s.distinct[static_cast<std::size_t>(r)];
      den *= s.theta0() - s.distinct[static_cast<std::size_t>(r)];
    }
    out.values[j] = num / den;
  }
  // Roots on the mesh are exact zeros.
  for (int r : roots) out.values[static_cast<std::size_t>(r)] = 0.0;
  return out;
}

}  // namespace

double spectral_inner(const Spectrum& s, std::span<const double> p, std::span<const double> q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < s.distinct.size(); ++i) acc += s.mults[i] * p[i] * q[i];
  return acc / static_cast<double>(s.n);
}

double spectral_trace(const Spectrum& s, std::span<const double> values) {
  double acc = 0.0;
  for (std::size_t i = 0; i < s.distinct.size(); ++i) acc += s.mults[i] * values[i];
  return acc;
}

MeshPolynomial PredistanceFamily::partial_sum(int k) const {
  MeshPolynomial out{values.front().mesh, std::vector<double>(values.front().size(), 0.0)};
  for (int i = 1; i <= k && i < static_cast<int>(values.size()); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) out.values[j] += values[static_cast<std::size_t>(i)].values[j];
  }
  return out;
}

PredistanceFamily predistance_polynomials(const Spectrum& s) {
  const int d = s.d();
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "predistance polynomials need d >= 1");
  const std::size_t m = s.distinct.size();
  PredistanceFamily fam;
  fam.values.push_back({s.distinct, std::vector<double>(m, 1.0)});
  fam.polys.push_back({{1.0}});
  fam.norms.push_back(1.0);

  for (int i = 0; i < d; ++i) {
    const auto& prev = fam.values.back();
    std::vector<double> w(m);
    for (std::size_t j = 0; j < m; ++j) w[j] = s.distinct[j] * prev.values[j];
    CoeffPolynomial wc = shift_up(fam.polys.back());
    const double start = spectral_inner(s, w, w);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < fam.values.size(); ++j) {
        const auto& pj = fam.values[j].values;
        const double coef = spectral_inner(s, w, pj) / fam.norms[j];
        for (std::size_t t = 0; t < m; ++t) w[t] -= coef * pj[t];
        axpy(-coef, fam.polys[j].coeffs, wc.coeffs);
      }
    }
    const double norm = spectral_inner(s, w, w);
    if (!(norm > 1e-24 * std::max(1.0, start)) || w[0] == 0.0) {
      throw Error(ErrorKind::DegenerateInnerProduct, "vanishing norm at degree " + std::to_string(i + 1));
    }
    const double c = w[0] / norm;
    for (double& v : w) v *= c;
    for (double& v : wc.coeffs) v *= c;
    wc.coeffs.resize(static_cast<std::size_t>(i) + 2);
    fam.values.push_back({s.distinct, std::move(w)});
    fam.polys.push_back(std::move(wc));
    fam.norms.push_back(c * c * norm);
  }
  return fam;
}

CoeffPolynomial hoffman_polynomial(const Spectrum& s) {
  CoeffPolynomial h{{static_cast<double>(s.n)}};
  for (std::size_t i = 1; i < s.distinct.size(); ++i) {
    const double den = s.theta0() - s.distinct[i];
    h = h * CoeffPolynomial{{-s.distinct[i] / den, 1.0 / den}};
  }
  return h;
}

MeshPolynomial hoffman_mesh(const Spectrum& s) {
  MeshPolynomial out{s.distinct, std::vector<double>(s.distinct.size(), 0.0)};
  out.values[0] = static_cast<double>(s.n);
  return out;
}

int mp2_index(const Spectrum& s) {
  for (int i = s.d() - 1; i >= 1; --i) {
    if (s.distinct[static_cast<std::size_t>(i)] > -1.0 + 1e-9) return i;
  }
  throw Error(ErrorKind::NoValidTheta, "no eigenvalue above -1 with index in [1, d-1]");
}

int mp4_index(const Spectrum& s, double delta) {
  const double t0 = s.theta0();
  const double td = s.theta_min();
  if (std::abs(t0 * (1.0 + td)) < 1e-12) throw Error(ErrorKind::NoValidTheta, "selection threshold undefined for theta_d = -1");
  const double threshold = -(t0 * t0 + t0 * td - delta) / (t0 * (1.0 + td));
  for (int i = s.d() - 2; i >= 1; --i) {
    if (s.distinct[static_cast<std::size_t>(i)] >= threshold - 1e-9) return i;
  }
  throw Error(ErrorKind::NoValidTheta, "no eigenvalue with index in [1, d-2] meets the cubic selection threshold");
}

int mp5_index(const Spectrum& s) {
  const auto pi = pi_products(s).pi;
  int best = -1;
  double best_value = 0.0;
  for (int i = 1; i <= s.d(); i += 2) {
    const auto ii = static_cast<std::size_t>(i);
    const double v = 1.0 + s.mults[ii] * pi[ii] / pi[0];
    if (best < 0) {
      best = i;
      best_value = v;
      continue;
    }
    const double tol = 1e-9 * std::max(1.0, std::abs(best_value));
    if (v < best_value - tol ||
        (std::abs(v - best_value) <= tol && s.mults[ii] < s.mults[static_cast<std::size_t>(best)])) {
      best = i;
      best_value = v;
    }
  }
  if (best < 0) throw Error(ErrorKind::NoValidTheta, "spectrum has no odd index");
  return best;
}

MinorClosedForm minor_closed_form(const Spectrum& s, int k, std::optional<double> delta) {
  const int d = s.d();
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "k must be non-negative");
  MinorClosedForm out;
  if (k >= d) {
    out.poly = {s.distinct, std::vector<double>(s.distinct.size(), 0.0)};
    out.poly.values[0] = 1.0;
    out.rule = "mp6";
    return out;
  }
  if (k == 0) {
    out.poly = {s.distinct, std::vector<double>(s.distinct.size(), 1.0)};
    out.rule = "f0";
    return out;
  }
  if (k == 1) {
    out.poly = product_of_roots(s, {d});
    out.rule = "mp1";
    out.selected = d;
    return out;
  }
  if (k == 2) {
    const int i = mp2_index(s);
    out.poly = product_of_roots(s, {i, i + 1});
    out.rule = "mp2";
    out.selected = i;
    return out;
  }
  if (k == 3 && (delta || k != d - 1)) {
    if (!delta) throw Error(ErrorKind::MissingAux, "k = 3 needs the closed 3-walk count W(x^3)");
    const int i = mp4_index(s, *delta);
    out.poly = product_of_roots(s, {i, i + 1, d});
    out.rule = "mp4";
    out.selected = i;
    try {
      const int j = mp2_index(s);
      auto f1 = product_of_roots(s, {d});
      auto f2 = product_of_roots(s, {j, j + 1});
      MeshPolynomial prod{s.distinct, std::vector<double>(s.distinct.size())};
      bool same = true;
      for (std::size_t t = 0; t < prod.size(); ++t) {
        prod.values[t] = f1.values[t] * f2.values[t];
        same = same && std::abs(prod.values[t] - out.poly.values[t]) <= 1e-12;
      }
      out.mp3_product = std::move(prod);
      out.mp3_matches = same;
    } catch (const Error&) {
      out.mp3_matches = false;
    }
    return out;
  }
  if (k == d - 1) {
    const int i = mp5_index(s);
    const auto pi = pi_products(s).pi;
    out.poly = {s.distinct, std::vector<double>(s.distinct.size(), 0.0)};
    out.poly.values[0] = 1.0;
    out.poly.values[static_cast<std::size_t>(i)] = pi[static_cast<std::size_t>(i)] / pi[0];
    out.rule = "mp5";
    out.selected = i;
    return out;
  }
  throw Error(ErrorKind::UnsupportedK, "no closed form for k = " + std::to_string(k) + " with d = " + std::to_string(d));
}

}  // namespace specind
