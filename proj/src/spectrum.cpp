#include "specind/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "specind/error.hpp"

namespace specind {

namespace {

double binomial_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

int checked_count(double v, const FamilySpec& spec) {
  if (v > 2e9) throw Error(ErrorKind::InvalidFamilyParameters, spec.to_string() + ": too many vertices");
  return static_cast<int>(v);
}

Spectrum kneser_spectrum(int n, int k, const FamilySpec& spec) {
  if (k < 1 || n < 2 * k) throw Error(ErrorKind::InvalidFamilyParameters, spec.to_string() + ": kneser needs k >= 1 and n >= 2k");
  if (n == 2 * k && n != 2) throw Error(ErrorKind::DisconnectedGraph, spec.to_string() + ": kneser graph with n = 2k");
  std::vector<double> theta;
  std::vector<int> mult;
  for (int j = 0; j <= k; ++j) {
    theta.push_back((j % 2 == 0 ? 1.0 : -1.0) * binomial_d(n - k - j, k - j));
    mult.push_back(checked_count(binomial_d(n, j) - binomial_d(n, j - 1), spec));
  }
  std::vector<std::size_t> order(theta.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return theta[a] > theta[b]; });
  std::vector<double> sorted_theta;
  std::vector<int> sorted_mult;
  for (std::size_t i : order) {
    if (!sorted_theta.empty() && sorted_theta.back() == theta[i]) {
      sorted_mult.back() += mult[i];
    } else {
      sorted_theta.push_back(theta[i]);
      sorted_mult.push_back(mult[i]);
    }
  }
  return Spectrum::from_distinct(std::move(sorted_theta), std::move(sorted_mult), true);
}

Spectrum circulant_spectrum(int n, const std::vector<int>& jumps) {
  std::vector<double> raw;
  raw.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double v = 0.0;
    for (int s : jumps) {
      if (2 * s == n) {
        v += j % 2 == 0 ? 1.0 : -1.0;
      } else {
        v += 2.0 * std::cos(2.0 * std::numbers::pi * j * s / n);
      }
    }
    raw.push_back(v);
  }
  auto s = group_eigenvalues(std::move(raw), 1e-9);
  s.exact = true;
  return s;
}

}  // namespace

Spectrum Spectrum::from_distinct(std::vector<double> distinct, std::vector<int> mults, bool exact) {
  if (distinct.empty() || distinct.size() != mults.size()) {
    throw Error(ErrorKind::InvalidArgument, "spectrum needs matching non-empty eigenvalue and multiplicity lists");
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    if (!std::isfinite(distinct[i])) throw Error(ErrorKind::InvalidArgument, "non-finite eigenvalue");
    if (mults[i] < 1) throw Error(ErrorKind::InvalidArgument, "multiplicities must be positive");
    if (i > 0 && !(distinct[i] < distinct[i - 1])) {
      throw Error(ErrorKind::InvalidArgument, "eigenvalues must be strictly decreasing");
    }
  }
  Spectrum s;
  s.distinct = std::move(distinct);
  s.mults = std::move(mults);
  s.exact = exact;
  for (std::size_t i = 0; i < s.distinct.size(); ++i) {
    s.raw.insert(s.raw.end(), static_cast<std::size_t>(s.mults[i]), s.distinct[i]);
  }
  s.n = s.raw.size();
  return s;
}

double Spectrum::moment(int p) const noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < distinct.size(); ++i) acc += mults[i] * std::pow(distinct[i], p);
  return acc;
}

bool Spectrum::looks_regular(double tol) const noexcept {
  return std::abs(moment(2) / static_cast<double>(n) - theta0()) <= tol * std::max(1.0, theta0());
}

Spectrum group_eigenvalues(std::vector<double> raw, double tol) {
  if (raw.empty()) throw Error(ErrorKind::InvalidArgument, "empty eigenvalue list");
  std::sort(raw.begin(), raw.end(), std::greater<>());
  const double thr = tol * std::max(1.0, std::abs(raw.front()));
  std::vector<double> distinct;
  std::vector<int> mults;
  double sum = raw.front();
  int count = 1;
  auto flush = [&] {
    double mean = sum / count;
    if (std::abs(mean - std::round(mean)) <= thr) mean = std::round(mean);
    if (mean == 0.0) mean = 0.0;  // drop negative zero
    distinct.push_back(mean);
    mults.push_back(count);
  };
  for (std::size_t i = 1; i < raw.size(); ++i) {
    const double gap = raw[i - 1] - raw[i];
    if (gap > thr / 10.0 && gap < thr * 10.0) {
      throw Error(ErrorKind::GroupingAmbiguity,
                  "eigenvalue gap " + std::to_string(gap) + " is within a factor 10 of the grouping threshold");
    }
    if (gap <= thr) {
      sum += raw[i];
      ++count;
    } else {
      flush();
      sum = raw[i];
      count = 1;
    }
  }
  flush();
  return Spectrum::from_distinct(std::move(distinct), std::move(mults), false);
}

Spectrum spectrum(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "grouping tolerance must be positive");
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < static_cast<Vertex>(n); ++u)
    for (Vertex v : g.neighbors(u)) a(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::EigenFailure, "symmetric eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  std::vector<double> raw(ev.data(), ev.data() + ev.size());
  return group_eigenvalues(std::move(raw), tol);
}

Spectrum exact_family_spectrum(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t count) {
    if (p.size() != count) throw Error(ErrorKind::InvalidFamilyParameters, spec.to_string() + ": wrong number of parameters");
  };
  auto bad = [&](const char* why) { return Error(ErrorKind::InvalidFamilyParameters, spec.to_string() + ": " + why); };
  switch (spec.family) {
    case Family::Cycle:
      arity(1);
      if (p[0] < 3) throw bad("cycle needs n >= 3");
      return circulant_spectrum(p[0], {1});
    case Family::Complete:
      arity(1);
      if (p[0] < 2) throw bad("complete graph needs n >= 2");
      return Spectrum::from_distinct({static_cast<double>(p[0] - 1), -1.0}, {1, p[0] - 1});
    case Family::CompleteBipartite: {
      arity(2);
      if (p[0] < 1 || p[1] < 1) throw bad("both parts must be non-empty");
      const double r = std::sqrt(static_cast<double>(p[0]) * p[1]);
      const double rr = std::round(r);
      const double root = std::abs(r - rr) < 1e-12 ? rr : r;
      if (p[0] + p[1] == 2) return Spectrum::from_distinct({1.0, -1.0}, {1, 1});
      return Spectrum::from_distinct({root, 0.0, -root}, {1, p[0] + p[1] - 2, 1});
    }
    case Family::Hypercube: {
      arity(1);
      if (p[0] < 1 || p[0] > 30) throw bad("hypercube dimension must be in [1, 30]");
      std::vector<double> theta;
      std::vector<int> mult;
      for (int i = 0; i <= p[0]; ++i) {
        theta.push_back(p[0] - 2.0 * i);
        mult.push_back(static_cast<int>(binomial_d(p[0], i)));
      }
      return Spectrum::from_distinct(std::move(theta), std::move(mult));
    }
    case Family::Circulant: {
      if (p.size() < 2) throw bad("circulant needs n and at least one jump");
      const int n = p[0];
      if (n < 3) throw bad("circulant needs n >= 3");
      std::vector<int> jumps(p.begin() + 1, p.end());
      int g = n;
      for (int s : jumps) {
        if (s < 1 || s > n / 2) throw bad("jumps must lie in [1, n/2]");
        g = std::gcd(g, s);
      }
      if (g != 1) throw Error(ErrorKind::DisconnectedGraph, spec.to_string() + ": gcd(n, s_1, ..., s_m) = " + std::to_string(g));
      std::sort(jumps.begin(), jumps.end());
      jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());
      return circulant_spectrum(n, jumps);
    }
    case Family::Kneser:
      arity(2);
      return kneser_spectrum(p[0], p[1], spec);
    case Family::Odd:
      arity(1);
      if (p[0] < 2) throw bad("odd graph needs l >= 2");
      return kneser_spectrum(2 * p[0] - 1, p[0] - 1, spec);
    case Family::Prism: {
      arity(1);
      if (p[0] < 3) throw bad("prism needs r >= 3");
      std::vector<double> raw;
      for (int j = 0; j < p[0]; ++j) {
        const double c = 2.0 * std::cos(2.0 * std::numbers::pi * j / p[0]);
        raw.push_back(c + 1.0);
        raw.push_back(c - 1.0);
      }
      auto s = group_eigenvalues(std::move(raw), 1e-9);
      s.exact = true;
      return s;
    }
    case Family::MoebiusLadder:
      arity(1);
      if (p[0] < 2) throw bad("moebius ladder needs r >= 2");
      return circulant_spectrum(2 * p[0], {1, p[0]});
    case Family::Petersen:
      arity(0);
      return kneser_spectrum(5, 2, spec);
  }
  throw Error(ErrorKind::NoClosedForm, spec.to_string());
}

PiProducts pi_products(const Spectrum& s) {
  PiProducts out;
  for (std::size_t i = 0; i < s.distinct.size(); ++i) {
    double prod = 1.0;
    for (std::size_t j = 0; j < s.distinct.size(); ++j) {
      if (j != i) prod *= std::abs(s.distinct[i] - s.distinct[j]);
    }
    out.pi.push_back(prod);
  }
  return out;
}

int pwr_level(const Graph& g, int max_level) {
  if (max_level <= 1) return std::max(max_level, 1);
  const std::size_t n = g.order();
  const int half = (max_level + 1) / 2;
  // walks[l][u] = (A^l)_{uu}, from <A^a e_u, A^b e_u> with a + b = l.
  std::vector<std::vector<long double>> walks(static_cast<std::size_t>(max_level) + 1, std::vector<long double>(n));
  std::vector<std::vector<long double>> powers(static_cast<std::size_t>(half) + 1, std::vector<long double>(n));
  for (std::size_t u = 0; u < n; ++u) {
    std::fill(powers[0].begin(), powers[0].end(), 0.0L);
    powers[0][u] = 1.0L;
    for (int j = 1; j <= half; ++j) {
      auto& cur = powers[static_cast<std::size_t>(j)];
      const auto& prev = powers[static_cast<std::size_t>(j - 1)];
      for (std::size_t v = 0; v < n; ++v) {
        long double acc = 0.0L;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) acc += prev[static_cast<std::size_t>(w)];
        cur[v] = acc;
      }
    }
    for (int l = 1; l <= max_level; ++l) {
      const auto& a = powers[static_cast<std::size_t>(l / 2)];
      const auto& b = powers[static_cast<std::size_t>(l - l / 2)];
      long double dot = 0.0L;
      for (std::size_t v = 0; v < n; ++v) dot += a[v] * b[v];
      walks[static_cast<std::size_t>(l)][u] = dot;
    }
  }
  for (int l = 2; l <= max_level; ++l) {
    const auto& w = walks[static_cast<std::size_t>(l)];
    const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    if (*hi - *lo > 1e-12L * std::max(1.0L, std::abs(*hi))) return l - 1;
  }
  return max_level;
}

RegularityReport classify_regularity(const Graph& g, const Spectrum& s) {
  return classify_regularity(g, s, distance_matrix(g));
}

RegularityReport classify_regularity(const Graph& g, const Spectrum& s, const DistanceMatrix& dm) {
  RegularityReport r;
  r.is_regular = g.is_regular();
  r.degree = r.is_regular ? g.degree(0) : -1;
  const int d = s.d();
  r.pwr_level = std::max(1, pwr_level(g, d));
  if (r.is_regular) r.pwr_level = std::max(r.pwr_level, std::min(2, std::max(d, 1)));
  r.is_walk_regular = r.pwr_level >= d;
  r.diameter = dm.diameter;
  r.diameter_equals_d = dm.diameter == d;

  const std::size_t n = g.order();
  const auto D = static_cast<std::size_t>(dm.diameter);
  std::vector<int> b(D + 1, -1);
  std::vector<int> c(D + 1, -1);
  bool drg = r.is_regular;
  for (std::size_t u = 0; u < n && drg; ++u) {
    for (std::size_t v = 0; v < n && drg; ++v) {
      const int i = dm.at(static_cast<Vertex>(u), static_cast<Vertex>(v));
      int ci = 0;
      int bi = 0;
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
        const int dw = dm.at(static_cast<Vertex>(u), w);
        if (dw == i - 1) ++ci;
        if (dw == i + 1) ++bi;
      }
      const auto idx = static_cast<std::size_t>(i);
      if (b[idx] < 0) {
        b[idx] = bi;
        c[idx] = ci;
      } else if (b[idx] != bi || c[idx] != ci) {
        drg = false;
      }
    }
  }
  r.is_distance_regular = drg;
  if (drg) {
    r.intersection_b.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(D));
    r.intersection_c.assign(c.begin() + 1, c.end());
  }
  return r;
}

DiagonalStats diagonal_stats(const Graph& g, const CoeffPolynomial& p) {
  const std::size_t n = g.order();
  if (p.coeffs.empty()) return {0.0, 0.0};
  DiagonalStats out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  std::vector<double> v(n);
  std::vector<double> next(n);
  for (std::size_t u = 0; u < n; ++u) {
    // Horner on vectors: v <- A v + a_i e_u, starting from a_deg e_u.
    std::fill(v.begin(), v.end(), 0.0);
    v[u] = p.coeffs.back();
    for (std::size_t i = p.coeffs.size() - 1; i-- > 0;) {
      for (std::size_t x = 0; x < n; ++x) {
        double acc = 0.0;
        for (Vertex y : g.neighbors(static_cast<Vertex>(x))) acc += v[static_cast<std::size_t>(y)];
        next[x] = acc;
      }
      next[u] += p.coeffs[i];
      std::swap(v, next);
    }
    out.w = std::min(out.w, v[u]);
    out.W = std::max(out.W, v[u]);
  }
  return out;
}

}  // namespace specind
