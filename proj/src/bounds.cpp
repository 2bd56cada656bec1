#include "specind/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "specind/error.hpp"

namespace specind {

namespace {

constexpr double kSignTol = 1e-9;

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

BoundReport make(BoundMethod method, int k, double value) {
  BoundReport r;
  r.method = method;
  r.k = k;
  r.value = value;
  r.floor_value = bound_floor(value);
  return r;
}

BoundReport inapplicable(BoundMethod method, int k, std::string reason) {
  BoundReport r;
  r.method = method;
  r.k = k;
  r.applicable = false;
  r.reason = std::move(reason);
  return r;
}

// Runs one method; library errors turn into an inapplicable report.
void attempt(std::vector<BoundReport>& out, BoundMethod method, int k, const std::function<BoundReport()>& fn) {
  try {
    BoundReport r = fn();
    r.k = k;
    out.push_back(std::move(r));
  } catch (const Error& e) {
    out.push_back(inapplicable(method, k, e.what()));
  }
}

std::string theta_label(int i) { return "theta_" + std::to_string(i); }

// Sum of multiplicities where the mesh value is >= 0 (or <= 0 when negated).
double sign_count(const Spectrum& s, std::span<const double> values, bool negate) {
  const double tol = kSignTol * std::max(1.0, max_abs(values));
  double count = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = negate ? -values[i] : values[i];
    if (v >= -tol) count += s.mults[i];
  }
  return count;
}

}  // namespace

std::string_view method_name(BoundMethod m) noexcept {
  switch (m) {
    case BoundMethod::Cvetkovic: return "cvetkovic";
    case BoundMethod::Hoffman: return "hoffman";
    case BoundMethod::InertiaGeneral: return "inertia_general";
    case BoundMethod::RatioGeneral: return "ratio_general";
    case BoundMethod::PwrInertia: return "pwr_inertia";
    case BoundMethod::PwrRatio: return "pwr_ratio";
    case BoundMethod::Mp2: return "mp2";
    case BoundMethod::Mp3: return "mp3";
    case BoundMethod::DminusOneInertiaEven: return "dminus1_inertia_even";
    case BoundMethod::DminusOneInertiaOdd: return "dminus1_inertia_odd";
    case BoundMethod::DminusOneRatioOdd: return "dminus1_ratio_odd";
    case BoundMethod::DminusOneCorollary: return "dminus1_corollary";
    case BoundMethod::Mp5: return "mp5";
    case BoundMethod::QkInertia: return "qk_inertia";
    case BoundMethod::QkRatio: return "qk_ratio";
    case BoundMethod::PdRatio: return "pd_ratio";
    case BoundMethod::SignRatio: return "sign_ratio";
    case BoundMethod::MinorInertia: return "minor_inertia";
    case BoundMethod::Diameter: return "diameter";
  }
  return "unknown";
}

long bound_floor(double v) noexcept {
  return static_cast<long>(std::floor(v + 1e-8 * std::max(1.0, std::abs(v))));
}

BoundReport cvetkovic_bound(std::span<const double> raw) {
  const double tol = kSignTol * std::max(1.0, max_abs(raw));
  long pos = 0;
  long neg = 0;
  for (double v : raw) {
    if (v >= -tol) ++pos;
    if (v <= tol) ++neg;
  }
  return make(BoundMethod::Cvetkovic, 1, static_cast<double>(std::min(pos, neg)));
}

BoundReport hoffman_bound(std::size_t n, double lambda1, double lambdan) {
  if (!(lambdan < 0.0)) throw Error(ErrorKind::InvalidArgument, "smallest eigenvalue must be negative");
  return make(BoundMethod::Hoffman, 1, static_cast<double>(n) / (1.0 - lambda1 / lambdan));
}

BoundReport hoffman_bound(const Graph& g, const Spectrum& s) {
  if (!g.is_regular()) throw Error(ErrorKind::NotRegular, "the ratio bound needs a regular graph");
  return hoffman_bound(s.n, s.theta0(), s.theta_min());
}

BoundReport inertia_general(const Graph& g, const Spectrum& s, const CoeffPolynomial& p, int k) {
  if (p.degree(1e-12) > k) throw Error(ErrorKind::InvalidArgument, "polynomial degree exceeds k");
  const DiagonalStats ds = diagonal_stats(g, p);
  std::vector<double> vals(s.distinct.size());
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = p(s.distinct[i]);
  const double tol = kSignTol * std::max({1.0, max_abs(vals), std::abs(ds.w), std::abs(ds.W)});
  double upper = 0.0;
  double lower = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] >= ds.w - tol) upper += s.mults[i];
    if (vals[i] <= ds.W + tol) lower += s.mults[i];
  }
  BoundReport r = make(BoundMethod::InertiaGeneral, k, std::min(upper, lower));
  r.coeffs = p;
  return r;
}

BoundReport ratio_general(const Graph& g, const Spectrum& s, const CoeffPolynomial& p, int k) {
  if (!g.is_regular()) throw Error(ErrorKind::NotRegular, "the ratio bound needs a regular graph");
  if (p.degree(1e-12) > k) throw Error(ErrorKind::InvalidArgument, "polynomial degree exceeds k");
  const DiagonalStats ds = diagonal_stats(g, p);
  const double top = p(s.theta0());
  double low = s.mults[0] > 1 ? top : kInf;
  for (std::size_t i = 1; i < s.distinct.size(); ++i) low = std::min(low, p(s.distinct[i]));
  if (!(top - low > 1e-12 * std::max(1.0, std::abs(top)))) {
    throw Error(ErrorKind::DegeneratePolynomial, "p(lambda_1) does not exceed min_{i>=2} p(lambda_i)");
  }
  BoundReport r = make(BoundMethod::RatioGeneral, k, static_cast<double>(s.n) * (ds.W - low) / (top - low));
  r.coeffs = p;
  return r;
}

BoundReport pwr_inertia(const Spectrum& s, const MeshPolynomial& sp, int k) {
  const double scale = std::max(1.0, max_abs(sp.values)) * static_cast<double>(s.n);
  const double tr = spectral_trace(s, sp.values);
  if (std::abs(tr) > 1e-7 * scale) throw Error(ErrorKind::TraceNotZero, "trace " + std::to_string(tr));
  BoundReport r = make(BoundMethod::PwrInertia, k, sign_count(s, sp.values, false));
  r.certificate = sp;
  return r;
}

BoundReport pwr_ratio(const Spectrum& s, const MeshPolynomial& f, int k) {
  const double scale = std::max(1.0, max_abs(f.values));
  if (std::abs(f.values[0] - 1.0) > kSignTol * scale) throw Error(ErrorKind::BadNormalization, "f(theta_0) != 1");
  const double low = *std::min_element(f.values.begin() + 1, f.values.end());
  if (std::abs(low) > kSignTol * scale) throw Error(ErrorKind::BadNormalization, "min_{i>=1} f(theta_i) != 0");
  BoundReport r = make(BoundMethod::PwrRatio, k, spectral_trace(s, f.values));
  r.certificate = f;
  return r;
}

Transformed sign_to_minor(const Spectrum& s, const MeshPolynomial& sp) {
  const double scale = std::max(1.0, max_abs(sp.values));
  const double tr = spectral_trace(s, sp.values);
  if (std::abs(tr) > 1e-7 * scale * static_cast<double>(s.n)) {
    throw Error(ErrorKind::TraceNotZero, "trace " + std::to_string(tr));
  }
  const double low = *std::min_element(sp.values.begin() + 1, sp.values.end());
  if (std::abs(low + 1.0) > kSignTol * scale) throw Error(ErrorKind::BadNormalization, "min_{i>=1} s(theta_i) != -1");
  const double den = 1.0 + sp.values[0];
  if (std::abs(den) <= 1e-12 * scale) throw Error(ErrorKind::DivisionByZero, "s(theta_0) = -1");
  if (den < 0.0) throw Error(ErrorKind::BadNormalization, "s(theta_0) < -1");
  Transformed out;
  out.poly = {sp.mesh, std::vector<double>(sp.size())};
  for (std::size_t i = 0; i < sp.size(); ++i) out.poly.values[i] = (1.0 + sp.values[i]) / den;
  out.poly.values[0] = 1.0;
  out.bound = make(BoundMethod::SignRatio, 0, static_cast<double>(s.n) / den);
  out.bound.certificate = out.poly;
  return out;
}

Transformed minor_to_sign(const Spectrum& s, const MeshPolynomial& f) {
  const double tr = spectral_trace(s, f.values);
  if (!(tr > 1e-12)) throw Error(ErrorKind::DivisionByZero, "tr f(A) must be positive");
  if (std::abs(f.values[0] - 1.0) > kSignTol * std::max(1.0, max_abs(f.values))) {
    throw Error(ErrorKind::BadNormalization, "f(theta_0) != 1");
  }
  const double n = static_cast<double>(s.n);
  Transformed out;
  out.poly = {f.mesh, std::vector<double>(f.size())};
  std::vector<double> centered(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.poly.values[i] = n / tr * f.values[i] - 1.0;
    centered[i] = f.values[i] - tr / n;
  }
  out.bound = make(BoundMethod::MinorInertia, 0, sign_count(s, centered, false));
  out.bound.certificate = out.poly;
  return out;
}

BoundReport alpha2_bound(const Spectrum& s) {
  const int i = mp2_index(s);
  const double t0 = s.theta0();
  const double a = s.distinct[static_cast<std::size_t>(i)];
  const double b = s.distinct[static_cast<std::size_t>(i) + 1];
  BoundReport r = make(BoundMethod::Mp2, 2, static_cast<double>(s.n) * (t0 + a * b) / ((t0 - a) * (t0 - b)));
  r.certificate = minor_closed_form(s, 2).poly;
  r.detail = theta_label(i);
  return r;
}

BoundReport alpha3_bound(const Spectrum& s, double delta) {
  if (s.d() < 3) throw Error(ErrorKind::NoValidTheta, "the cubic closed form needs d >= 3");
  const auto form = minor_closed_form(s, 3, delta);
  const int i = form.selected;
  const double t0 = s.theta0();
  const double a = s.distinct[static_cast<std::size_t>(i)];
  const double b = s.distinct[static_cast<std::size_t>(i) + 1];
  const double c = s.theta_min();
  const double num = delta - a * b * c - t0 * (a + b + c);
  BoundReport r = make(BoundMethod::Mp3, 3, static_cast<double>(s.n) * num / ((t0 - a) * (t0 - b) * (t0 - c)));
  r.certificate = form.poly;
  r.detail = theta_label(i) + (form.mp3_matches ? "; product rule agrees" : "; product rule differs");
  return r;
}

std::vector<BoundReport> dminus1_bounds(const Spectrum& s, const PiProducts& pi) {
  const int d = s.d();
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "(d-1)-bounds need d >= 2");
  const int k = d - 1;
  const auto& p = pi.pi;
  auto m = [&](int i) { return static_cast<double>(s.mults[static_cast<std::size_t>(i)]); };
  auto ratio = [&](int i) { return p[0] / p[static_cast<std::size_t>(i)]; };
  auto degenerate = [&](int i) { return std::abs(m(i) - ratio(i)) <= 1e-9 * std::max(1.0, m(i)); };

  std::vector<BoundReport> out;
  for (int i = 1; i <= d / 2; ++i) {
    if (degenerate(2 * i)) {
      out.push_back(inapplicable(BoundMethod::DminusOneInertiaEven, k,
                                 "m_" + std::to_string(2 * i) + " = pi_0 / pi_" + std::to_string(2 * i)));
      out.back().detail = theta_label(2 * i);
      continue;
    }
    out.push_back(make(BoundMethod::DminusOneInertiaEven, k, m(2 * i)));
    out.back().detail = theta_label(2 * i);
  }
  for (int i = 1; i <= (d + 1) / 2; ++i) {
    const int j = 2 * i - 1;
    out.push_back(make(BoundMethod::DminusOneInertiaOdd, k, 1.0 + m(j)));
    out.back().detail = theta_label(j);
    out.push_back(make(BoundMethod::DminusOneRatioOdd, k, 1.0 + m(j) / ratio(j)));
    out.back().detail = theta_label(j);
  }
  if (d % 2 == 0) {
    if (degenerate(d)) {
      out.push_back(inapplicable(BoundMethod::DminusOneCorollary, k, "m_d = pi_0 / pi_d"));
    } else {
      out.push_back(make(BoundMethod::DminusOneCorollary, k, m(d)));
    }
  } else {
    out.push_back(make(BoundMethod::DminusOneCorollary, k, 1.0 + m(d) * std::min(1.0, 1.0 / ratio(d))));
  }
  out.back().detail = theta_label(d);

  const int j = mp5_index(s);
  out.push_back(make(BoundMethod::Mp5, k, 1.0 + m(j) / ratio(j)));
  out.back().detail = theta_label(j);
  out.back().certificate = minor_closed_form(s, k).poly;
  return out;
}

std::pair<BoundReport, BoundReport> qk_bounds(const Graph& g, const Spectrum& s, const PredistanceFamily& pd, int k) {
  if (k < 1 || k > s.d()) throw Error(ErrorKind::InvalidArgument, "k must lie in [1, d]");
  if (pwr_level(g, k) < k) throw Error(ErrorKind::NotPWR, "graph is not " + std::to_string(k) + "-partially walk-regular");
  const MeshPolynomial q = pd.partial_sum(k);
  BoundReport inertia =
      make(BoundMethod::QkInertia, k, std::min(sign_count(s, q.values, false), sign_count(s, q.values, true)));
  inertia.certificate = q;

  const double low = *std::min_element(q.values.begin() + 1, q.values.end());
  BoundReport ratio;
  if (!(low < -kSignTol * std::max(1.0, max_abs(q.values)))) {
    ratio = inapplicable(BoundMethod::QkRatio, k, "min_{i>=1} q'_k(theta_i) is not negative");
  } else {
    ratio = make(BoundMethod::QkRatio, k, static_cast<double>(s.n) / (1.0 - q.values[0] / low));
    ratio.certificate = q;
  }
  return {std::move(inertia), std::move(ratio)};
}

BoundReport pd_ratio_bound(const Spectrum& s, const PredistanceFamily& pd) {
  const int d = s.d();
  if (d < 2) throw Error(ErrorKind::NotApplicable, "needs d >= 2");
  const auto& pdv = pd.values[static_cast<std::size_t>(d)].values;
  const double top = *std::max_element(pdv.begin() + 1, pdv.end());
  const double n = static_cast<double>(s.n);
  const double den = n + top - pdv[0];
  if (!(den > 0.0)) throw Error(ErrorKind::DegeneratePolynomial, "non-positive denominator");
  BoundReport r = make(BoundMethod::PdRatio, d - 1, n * (1.0 + top) / den);
  r.certificate = pd.values[static_cast<std::size_t>(d)];
  return r;
}

std::vector<BoundReport> best_bounds(const Graph& g, int k, const BoundsConfig& cfg) {
  return best_bounds(g, spectrum(g, cfg.tol), k, cfg);
}

std::vector<BoundReport> best_bounds(const Graph& g, const Spectrum& s, int k, const BoundsConfig& cfg) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  const DistanceMatrix dm = distance_matrix(g);
  std::vector<BoundReport> out;
  if (k >= dm.diameter) {
    out.push_back(make(BoundMethod::Diameter, k, 1.0));
    out.back().best = true;
    return out;
  }
  const RegularityReport reg = classify_regularity(g, s, dm);
  const int d = s.d();
  const bool pwr = reg.is_regular && reg.pwr_level >= k;

  if (k == 1) {
    attempt(out, BoundMethod::Cvetkovic, k, [&] { return cvetkovic_bound(s.raw); });
    attempt(out, BoundMethod::Hoffman, k, [&] { return hoffman_bound(g, s); });
  }

  std::optional<MinorSolution> minor;
  attempt(out, BoundMethod::PwrRatio, k, [&] {
    minor = minor_polynomial(s, k);
    if (pwr) return pwr_ratio(s, minor->poly, k);
    BoundReport r = ratio_general(g, s, mesh_to_coeffs(minor->poly), k);
    r.certificate = minor->poly;
    return r;
  });

  std::optional<MilpSolution> sign;
  if (!cfg.use_milp) {
    out.push_back(inapplicable(BoundMethod::PwrInertia, k, "MILP disabled"));
  } else if (d > cfg.milp_max_d) {
    out.push_back(inapplicable(BoundMethod::PwrInertia, k, "d exceeds the MILP size cap"));
  } else {
    attempt(out, BoundMethod::PwrInertia, k, [&] {
      sign = sign_polynomial(s, k, cfg.milp);
      if (pwr) return pwr_inertia(s, sign->sign_poly, k);
      BoundReport r = inertia_general(g, s, sign->coeffs, k);
      r.certificate = sign->sign_poly;
      return r;
    });
  }

  if (pwr && sign) {
    attempt(out, BoundMethod::SignRatio, k, [&] { return sign_to_minor(s, sign->sign_poly).bound; });
  }
  if (pwr && minor) {
    attempt(out, BoundMethod::MinorInertia, k, [&] { return minor_to_sign(s, minor->poly).bound; });
  }
  if (pwr && k == 2) attempt(out, BoundMethod::Mp2, k, [&] { return alpha2_bound(s); });
  if (pwr && k == 3 && d >= 3) {
    attempt(out, BoundMethod::Mp3, k, [&] { return alpha3_bound(s, s.moment(3) / static_cast<double>(s.n)); });
  }
  if (k == d - 1 && reg.is_walk_regular) {
    try {
      for (auto& r : dminus1_bounds(s, pi_products(s))) out.push_back(std::move(r));
    } catch (const Error& e) {
      out.push_back(inapplicable(BoundMethod::DminusOneCorollary, k, e.what()));
    }
  }
  if (pwr) {
    try {
      const PredistanceFamily pd = predistance_polynomials(s);
      auto [qi, qr] = qk_bounds(g, s, pd, k);
      out.push_back(std::move(qi));
      out.push_back(std::move(qr));
      if (k == d - 1 && reg.is_walk_regular) {
        attempt(out, BoundMethod::PdRatio, k, [&] { return pd_ratio_bound(s, pd); });
      }
    } catch (const Error& e) {
      out.push_back(inapplicable(BoundMethod::QkRatio, k, e.what()));
    }
  }

  long best = -1;
  for (const auto& r : out) {
    if (r.applicable && (best < 0 || r.floor_value < best)) best = r.floor_value;
  }
  for (auto& r : out) r.best = r.applicable && r.floor_value == best;
  return out;
}

}  // namespace specind
