#include "specind/ch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specind/bounds.hpp"
#include "specind/error.hpp"

namespace specind {

namespace {

double sign_count(const Spectrum& s, const std::vector<double>& v) {
  double scale = 1.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  double c = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= -1e-9 * scale) c += s.mults[i];
  }
  return c;
}

// Constant degree, constant common-neighbour counts on edges and on non-edges.
bool strongly_regular_on(const Graph& g, const std::vector<Vertex>& verts) {
  const std::size_t n = verts.size();
  int degree = -1;
  int lambda = -1;
  int mu = -1;
  for (std::size_t a = 0; a < n; ++a) {
    int deg = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && g.adjacent(verts[a], verts[b])) ++deg;
    }
    if (degree >= 0 && deg != degree) return false;
    degree = deg;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      int common = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != a && c != b && g.adjacent(verts[a], verts[c]) && g.adjacent(verts[b], verts[c])) ++common;
      }
      int& slot = g.adjacent(verts[a], verts[b]) ? lambda : mu;
      if (slot >= 0 && slot != common) return false;
      slot = common;
    }
  }
  return true;
}

}  // namespace

CHVerdict ch_classify(const Graph& g, int k, const CHConfig& cfg) {
  const Spectrum s = spectrum(g, cfg.tol);
  if (k < 1 || k >= s.d()) throw Error(ErrorKind::InvalidArgument, "classification needs 1 <= k < d");
  const RegularityReport reg = classify_regularity(g, s);
  if (!reg.is_regular || reg.pwr_level < k) {
    throw Error(ErrorKind::NotPWR, "graph is not " + std::to_string(k) + "-partially walk-regular");
  }
  const MilpSolution sign = sign_polynomial(s, k, cfg.milp);
  const MinorSolution minor = minor_polynomial(s, k);

  CHVerdict v;
  v.k = k;
  v.inertia_value = sign.objective;
  v.ratio_raw = minor.trace;
  v.ratio_value = bound_floor(minor.trace);
  v.bounds_equal = v.inertia_value == v.ratio_value;
  v.sign_poly = sign.sign_poly;
  v.minor_poly = minor.poly;

  const double n = static_cast<double>(s.n);
  const auto& f = minor.poly.values;
  const auto& y = sign.sign_poly.values;

  // The minor polynomial, shifted to trace zero, is itself an optimal sign polynomial.
  std::vector<double> centered(f.size());
  std::vector<double> flipped(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    centered[i] = f[i] - minor.trace / n;
    flipped[i] = -centered[i];
  }
  const double count = std::min(sign_count(s, centered), sign_count(s, flipped));
  bool related = count == static_cast<double>(sign.objective);

  // The sign polynomial, mapped to a minor polynomial, attains the LP optimum.
  try {
    const auto back = sign_to_minor(s, sign.sign_poly);
    const double tr = spectral_trace(s, back.poly.values);
    related = related || std::abs(tr - minor.trace) <= 1e-6 * std::max(1.0, minor.trace);
  } catch (const Error&) {
  }

  const double fm = std::accumulate(f.begin(), f.end(), 0.0) / static_cast<double>(f.size());
  const double ym = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
  double sff = 0.0, sfy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    sff += (f[i] - fm) * (f[i] - fm);
    sfy += (f[i] - fm) * (y[i] - ym);
    syy += y[i] * y[i];
  }
  v.fit_scale = sff > 0.0 ? sfy / sff : 0.0;
  double res = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double e = y[i] - (ym + v.fit_scale * (f[i] - fm));
    res += e * e;
  }
  v.fit_residual = syy > 0.0 ? std::sqrt(res / syy) : 0.0;
  v.linearly_related = related || v.fit_residual < 1e-6;
  v.is_ch = v.bounds_equal && v.linearly_related;

  if (cfg.with_exact) {
    try {
      v.exact = alpha_k_exact(g, k, cfg.exact).alpha_k;
      v.is_tight_ch = v.is_ch && v.inertia_value == *v.exact && v.ratio_value == *v.exact;
    } catch (const Error& e) {
      v.exact_note = std::string("exact unavailable: ") + e.what();
    }
  }
  return v;
}

SimplexGeometry simplex_geometry(const Spectrum& s, const PiProducts& pi, int i, int r) {
  if (i < 0 || i > s.d()) throw Error(ErrorKind::InvalidArgument, "eigenvalue index out of range");
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "clique size must be positive");
  const auto ii = static_cast<std::size_t>(i);
  const double m = s.mults[ii];
  const double q = (i % 2 == 0 ? 1.0 : -1.0) * pi.pi[0] / pi.pi[ii];
  const double n = static_cast<double>(s.n);
  auto root = [&](double rad, const char* what) {
    if (rad < -1e-9 * std::max(1.0, m)) {
      throw Error(ErrorKind::NegativeRadicand, std::string(what) + " radicand is negative for r = " + std::to_string(r));
    }
    return std::sqrt(std::max(0.0, rad));
  };
  SimplexGeometry out;
  out.S = root((m + (r - 1) * q) / (r * n), "S");
  out.R = root((r - 1) * (m - q) / (r * n), "R");
  out.L = root(2.0 * (m - q) / n, "L");
  return out;
}

MultiplicityReport multiplicity_feasibility(const Spectrum& s, const PiProducts& pi, int r) {
  MultiplicityReport out;
  out.all_hold = true;
  out.all_equal = true;
  out.max_r = static_cast<long>(s.n);
  for (int i = 1; i <= s.d(); ++i) {
    const auto ii = static_cast<std::size_t>(i);
    const double q = pi.pi[0] / pi.pi[ii];
    MultiplicityCheck c;
    c.index = i;
    c.actual = s.mults[ii];
    c.required = i % 2 == 0 ? q : (r - 1) * q;
    const double tol = 1e-9 * std::max(1.0, c.required);
    c.holds = c.actual >= c.required - tol;
    c.equality = std::abs(c.actual - c.required) <= tol;
    out.all_hold = out.all_hold && c.holds;
    out.all_equal = out.all_equal && c.equality;
    if (i % 2 == 1) out.max_r = std::min(out.max_r, bound_floor(1.0 + c.actual / q));
    out.checks.push_back(c);
  }
  return out;
}

double spectral_excess(const Spectrum& s, const PiProducts& pi) {
  if (s.d() < 1) throw Error(ErrorKind::InvalidArgument, "spectral excess needs d >= 1");
  double sum = 0.0;
  for (std::size_t i = 0; i < s.distinct.size(); ++i) {
    const double q = pi.pi[0] / pi.pi[i];
    sum += q * q / s.mults[i];
  }
  return static_cast<double>(s.n) / sum;
}

double mean_excess(const DistanceMatrix& dm, int d) {
  const auto c = std::count(dm.dist.begin(), dm.dist.end(), d);
  return static_cast<double>(c) / static_cast<double>(dm.n);
}

double mean_excess(const Graph& g) { return mean_excess(distance_matrix(g), spectrum(g).d()); }

AntipodalVerdict antipodal_check(const Graph& g, const Spectrum& s, const PiProducts& pi) {
  const DistanceMatrix dm = distance_matrix(g);
  const int d = s.d();
  if (dm.diameter < d) throw Error(ErrorKind::NotApplicable, "diameter is smaller than d");
  AntipodalVerdict v;
  const double me = mean_excess(dm, d);
  v.r = static_cast<int>(std::lround(1.0 + me));
  const bool integral = std::abs(1.0 + me - v.r) < 1e-9;

  v.multiplicities_equal = multiplicity_feasibility(s, pi, v.r).all_equal;
  double sum = 0.0;
  for (double p : pi.pi) sum += pi.pi[0] / p;
  const double n = static_cast<double>(s.n);
  v.order_identity = std::abs(n - 0.5 * v.r * sum) <= 1e-8 * n;
  v.distance_regular = classify_regularity(g, s, dm).is_distance_regular;

  v.classes = integral;
  for (Vertex u = 0; v.classes && u < static_cast<Vertex>(dm.n); ++u) {
    int size = 1;
    for (Vertex w = 0; w < static_cast<Vertex>(dm.n); ++w) {
      if (dm.at(u, w) != d) continue;
      ++size;
      // w must see u's whole class at distance d.
      for (Vertex x = 0; x < static_cast<Vertex>(dm.n); ++x) {
        if (x != w && dm.at(u, x) == d && dm.at(w, x) != d) v.classes = false;
      }
    }
    if (size != v.r) v.classes = false;
  }
  v.antipodal = integral && v.multiplicities_equal && v.order_identity && v.distance_regular && v.classes;
  return v;
}

bool srg_tightness_check(const Graph& g, std::span<const Vertex> witness) {
  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  const bool complete = g.edge_count() * 2 == g.order() * (g.order() - 1);
  if (complete || !strongly_regular_on(g, all)) throw Error(ErrorKind::NotSRG, "graph is not strongly regular");
  if (!verify_independent(g, 1, witness)) throw Error(ErrorKind::InvalidArgument, "witness is not an independent set");
  std::vector<bool> in(g.order(), false);
  for (Vertex v : witness) in[static_cast<std::size_t>(v)] = true;
  std::vector<Vertex> rest;
  for (Vertex v : all) {
    if (!in[static_cast<std::size_t>(v)]) rest.push_back(v);
  }
  return strongly_regular_on(g, rest);
}

}  // namespace specind
