#include "specind/programs.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specind/error.hpp"

namespace specind {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Node relaxations are built in an equivalent, well-scaled form: b_j = 0
// becomes the bound y_j <= -eps, b_j = 1 drops the (redundant under the box)
// indicator row, and a free b_j enters as z_j = M b_j with cost m_j / M.
struct Search {
  const Spectrum& s;
  const std::vector<std::vector<double>>& rows;  // degree and trace rows over y
  double big_m;
  double eps;
  std::size_t node_limit;
  std::vector<std::size_t> order;
  std::vector<double> lo, hi;  // current bounds on b
  int best = 0;
  std::vector<int> best_b;
  std::vector<double> best_y;
  std::size_t nodes = 0;

  LinearProgram node_program(double& constant) const {
    const std::size_t m = s.distinct.size();
    LinearProgram lp;
    constant = 0.0;
    for (std::size_t j = 0; j < m; ++j) lp.add_var(0.0, -1.0, hi[j] == 0.0 ? -eps : 1.0);
    for (const auto& r : rows) lp.add_eq(r, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      if (lo[j] == 1.0) constant += s.mults[j];
      if (lo[j] != 0.0 || hi[j] != 1.0) continue;
      const std::size_t z = lp.add_var(s.mults[j] / big_m, 0.0, kInf);
      const std::size_t t = lp.add_var(0.0, 0.0, kInf);
      std::vector<double> row(lp.num_vars(), 0.0);
      row[j] = 1.0;
      row[z] = -1.0;
      row[t] = 1.0;
      lp.add_eq(std::move(row), -eps);
    }
    return lp;
  }

  void visit(std::size_t depth) {
    if (++nodes > node_limit) throw Error(ErrorKind::Timeout, "branch-and-bound node limit reached");
    double constant = 0.0;
    const LinearProgram lp = node_program(constant);
    LpSolution sol;
    try {
      sol = solve_lp(lp);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Infeasible) return;
      throw;
    }
    if (sol.objective + constant > best - 1 + 1e-6) return;

    // Rounding: b_j = 1 exactly where y_j fails to sit below -eps.
    const std::size_t m = s.distinct.size();
    std::vector<int> cand(m);
    int value = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const bool neg = sol.values[j] <= -eps + 1e-9;
      cand[j] = (hi[j] == 0.0 || (lo[j] == 0.0 && neg)) ? 0 : 1;
      value += cand[j] * s.mults[j];
    }
    if (value < best) {
      best = value;
      best_b = cand;
      best_y.assign(sol.values.begin(), sol.values.begin() + static_cast<std::ptrdiff_t>(m));
    }
    if (depth == order.size()) return;
    const std::size_t j = order[depth];
    for (double v : {0.0, 1.0}) {
      lo[j] = hi[j] = v;
      visit(depth + 1);
      lo[j] = 0.0;
      hi[j] = 1.0;
    }
  }
};

double default_big_m(const Spectrum& s, int k) {
  double top = 1.0;
  for (double t : s.distinct) top = std::max(top, std::abs(t));
  return 1e4 * std::pow(top, k);
}

std::vector<double> trace_row(const Spectrum& s) {
  const double top = *std::max_element(s.mults.begin(), s.mults.end());
  std::vector<double> row(s.mults.size());
  for (std::size_t j = 0; j < row.size(); ++j) row[j] = s.mults[j] / top;
  return row;
}

}  // namespace

std::vector<std::vector<double>> degree_constraints(const Spectrum& s, int k) {
  std::vector<std::vector<double>> basis;
  for (int m = std::max(k, 0) + 1; m <= s.d(); ++m) {
    auto row = divided_difference_row(s.distinct, static_cast<std::size_t>(m));
    double norm = std::sqrt(dot(row, row));
    for (double& v : row) v /= norm;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const double c = dot(row, q);
        for (std::size_t i = 0; i < row.size(); ++i) row[i] -= c * q[i];
      }
    }
    norm = std::sqrt(dot(row, row));
    if (norm < 1e-12) continue;
    for (double& v : row) v /= norm;
    basis.push_back(std::move(row));
  }
  return basis;
}

LinearProgram minor_program(const Spectrum& s, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "k must be non-negative");
  LinearProgram lp;
  for (int i = 1; i <= s.d(); ++i) lp.add_var(s.mults[static_cast<std::size_t>(i)], 0.0, kInf);
  for (const auto& q : degree_constraints(s, k)) {
    lp.add_eq(std::vector<double>(q.begin() + 1, q.end()), -q[0]);
  }
  return lp;
}

MinorSolution minor_polynomial(const Spectrum& s, int k) {
  const int d = s.d();
  MinorSolution out;
  out.poly.mesh = s.distinct;
  out.poly.values.assign(s.distinct.size(), 0.0);
  out.poly.values[0] = 1.0;
  if (d == 0) {
    out.trace = 1.0;
    return out;
  }
  const LinearProgram lp = minor_program(s, k);
  LpSolution sol = solve_lp(lp);

  // Among optimal vertices prefer mass on small multiplicities.
  LinearProgram tie = lp;
  std::vector<double> row(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    const double m = s.mults[static_cast<std::size_t>(i)];
    row[static_cast<std::size_t>(i - 1)] = m;
    tie.objective[static_cast<std::size_t>(i - 1)] = m * m;
  }
  tie.add_eq(row, sol.objective);
  try {
    sol = solve_lp(tie);
  } catch (const Error&) {
    // keep the primary vertex
  }

  double scale = 1.0;
  for (double v : sol.values) scale = std::max(scale, std::abs(v));
  double lowest = kInf;
  for (int i = 1; i <= d; ++i) {
    double v = sol.values[static_cast<std::size_t>(i - 1)];
    if (std::abs(v) <= 1e-12 * scale) v = 0.0;
    out.poly.values[static_cast<std::size_t>(i)] = v;
    lowest = std::min(lowest, v);
  }
  if (lowest > 1e-9) {
    throw Error(ErrorKind::NormalizationViolation, "minor LP vertex has no zero on theta_1..theta_d");
  }
  for (std::size_t i = 0; i < out.poly.size(); ++i) out.trace += s.mults[i] * out.poly.values[i];

  // A vertex has at least k zeros, and f is fixed by k of them. Rebuilding f
  // from those zeros removes the LP round-off, which on large meshes can push
  // the trace below an integer.
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i < out.poly.size(); ++i) idx.push_back(i);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(out.poly.values[a]) < std::abs(out.poly.values[b]); });
  idx.resize(std::min(idx.size(), static_cast<std::size_t>(k)));
  std::vector<double> polished(out.poly.size(), 1.0);
  double trace = 0.0;
  bool feasible = true;
  for (std::size_t i = 0; i < polished.size(); ++i) {
    for (std::size_t z : idx) polished[i] *= (s.distinct[i] - s.distinct[z]) / (s.distinct[0] - s.distinct[z]);
    feasible = feasible && (i == 0 || polished[i] >= -1e-9);
    trace += s.mults[i] * polished[i];
  }
  if (feasible && trace <= out.trace + 1e-6 * std::max(1.0, out.trace)) {
    for (std::size_t z : idx) polished[z] = 0.0;
    out.poly.values = std::move(polished);
    out.trace = trace;
  }
  return out;
}

SignProgram sign_program(const Spectrum& s, int k, const MilpConfig& cfg) {
  const std::size_t m = s.distinct.size();
  const double big_m = cfg.big_m > 0.0 ? cfg.big_m : default_big_m(s, k);
  SignProgram prog;
  auto& lp = prog.lp;
  for (std::size_t j = 0; j < m; ++j) lp.add_var(0.0, -1.0, 1.0);
  for (std::size_t j = 0; j < m; ++j) prog.binaries.push_back(lp.add_var(s.mults[j], 0.0, 1.0));
  std::vector<std::size_t> slack;
  for (std::size_t j = 0; j < m; ++j) slack.push_back(lp.add_var(0.0, 0.0, kInf));

  for (const auto& q : degree_constraints(s, k)) lp.add_eq(q, 0.0);
  lp.add_eq(trace_row(s), 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<double> row(lp.num_vars(), 0.0);
    row[j] = 1.0;
    row[prog.binaries[j]] = -big_m;
    row[slack[j]] = 1.0;
    lp.add_eq(std::move(row), -cfg.eps);
  }
  return prog;
}

MilpSolution sign_polynomial(const Spectrum& s, int k, const MilpConfig& cfg) {
  const int d = s.d();
  if (k < 1 || k >= d) throw Error(ErrorKind::InvalidArgument, "sign polynomial needs 1 <= k < d");
  if (!(cfg.eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  const std::size_t m = s.distinct.size();
  auto rows = degree_constraints(s, k);
  rows.push_back(trace_row(s));
  const double big_m = cfg.big_m > 0.0 ? cfg.big_m : default_big_m(s, k);

  Search search{s, rows, big_m, cfg.eps, cfg.node_limit, {}, std::vector<double>(m, 0.0), std::vector<double>(m, 1.0),
                0, {}, {}, 0};
  search.order.resize(m);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](std::size_t a, std::size_t b) { return s.mults[a] > s.mults[b]; });
  // s = 0 with every b_j = 1 is always feasible.
  search.best = static_cast<int>(s.n);
  search.best_b.assign(m, 1);
  search.best_y.assign(m, 0.0);
  search.visit(0);

  MilpSolution out;
  out.b = search.best_b;
  out.nodes = search.nodes;
  std::vector<double> y = search.best_y;

  // Canonical certificate for the optimal sign pattern: values >= -1, then
  // s(theta_0) as large as possible, then the negative side pushed down to -1.
  {
    LinearProgram lp;
    for (std::size_t j = 0; j < m; ++j) {
      const double lo = (j == 0 && out.b[0] == 1) ? -kInf : -1.0;
      lp.add_var(0.0, lo, out.b[j] == 0 ? -cfg.eps : kInf);
    }
    for (const auto& r : rows) lp.add_eq(r, 0.0);
    try {
      if (out.b[0] == 1) {
        lp.objective[0] = -1.0;
        const double top = solve_lp(lp).values[0];
        lp.objective[0] = 0.0;
        lp.lower[0] = lp.upper[0] = top;
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (out.b[j] == 0) lp.objective[j] = s.mults[j];
      }
      y = solve_lp(lp).values;
    } catch (const Error&) {
      // keep the branch-and-bound point
    }
  }
  double lowest = 0.0;
  for (std::size_t j = 1; j < m; ++j) lowest = std::min(lowest, y[j]);
  if (lowest < 0.0) {
    for (double& v : y) v /= -lowest;
  }

  double norm = 0.0;
  for (double v : y) norm = std::max(norm, std::abs(v));
  for (double& v : y) {
    if (std::abs(v) <= 1e-12 * norm) v = 0.0;
  }
  double tr = 0.0;
  for (std::size_t j = 0; j < m; ++j) tr += s.mults[j] * y[j];
  if (std::abs(tr) > 1e-7 * std::max(1.0, norm)) {
    throw Error(ErrorKind::NumericalInstability, "sign polynomial trace " + std::to_string(tr));
  }
  out.objective = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (y[j] >= -1e-9 * std::max(1.0, norm) && out.b[j] == 0) {
      throw Error(ErrorKind::NumericalInstability, "indicator violated at theta_" + std::to_string(j));
    }
    out.objective += out.b[j] * s.mults[j];
  }
  out.sign_poly = {s.distinct, std::move(y)};
  out.coeffs = mesh_to_coeffs(out.sign_poly);
  return out;
}

}  // namespace specind
