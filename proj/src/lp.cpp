#include "specind/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "specind/error.hpp"

namespace specind {

namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kCostTol = 1e-10;
constexpr double kFeasTol = 1e-9;

struct Column {
  std::size_t var;  // original variable, or npos for box slacks
  double sign;
};

constexpr std::size_t kNoVar = static_cast<std::size_t>(-1);

class Tableau {
 public:
  Tableau(std::vector<std::vector<double>> rows, std::vector<double> rhs, std::size_t structural)
      : m_(rows.size()), n_(structural), a_(std::move(rows)), b_(std::move(rhs)), basis_(m_) {
    // Artificial columns n_..n_+m_-1 form the initial basis.
    for (std::size_t i = 0; i < m_; ++i) {
      a_[i].resize(n_ + m_, 0.0);
      a_[i][n_ + i] = 1.0;
      basis_[i] = n_ + i;
    }
  }

  std::size_t pivots() const noexcept { return pivots_; }

  /// Minimizes cost over the current basis; columns >= allowed are barred from entering.
  void optimize(const std::vector<double>& cost, std::size_t allowed) {
    for (;;) {
      std::size_t enter = kNoVar;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (is_basic(j)) continue;
        if (reduced_cost(cost, j) < -kCostTol) {
          enter = j;
          break;
        }
      }
      if (enter == kNoVar) return;
      std::size_t leave = kNoVar;
      double best = kInf;
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = a_[i][enter];
        if (a <= kPivotTol) continue;
        const double ratio = b_[i] / a;
        if (leave == kNoVar || ratio < best - 1e-12) {
          best = ratio;
          leave = i;
        } else if (ratio <= best + 1e-12 && basis_[i] < basis_[leave]) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
      if (leave == kNoVar) throw Error(ErrorKind::Unbounded, "objective is unbounded below");
      pivot(leave, enter);
    }
  }

  double objective(const std::vector<double>& cost) const {
    double z = 0.0;
    for (std::size_t i = 0; i < m_; ++i) z += cost[basis_[i]] * b_[i];
    return z;
  }

  /// Pivots artificial columns out of the basis where possible.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!is_basic(j) && std::abs(a_[i][j]) > 1e-9) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<double> primal() const {
    std::vector<double> x(n_ + m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) x[basis_[i]] = b_[i];
    x.resize(n_);
    return x;
  }

 private:
  bool is_basic(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  double reduced_cost(const std::vector<double>& cost, std::size_t j) const {
    double r = cost[j];
    for (std::size_t i = 0; i < m_; ++i) r -= cost[basis_[i]] * a_[i][j];
    return r;
  }

  void pivot(std::size_t r, std::size_t c) {
    const double p = a_[r][c];
    for (double& v : a_[r]) v /= p;
    b_[r] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = a_[i][c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < a_[i].size(); ++j) a_[i][j] -= f * a_[r][j];
      a_[i][c] = 0.0;
      b_[i] -= f * b_[r];
      if (b_[i] < 0.0 && b_[i] > -1e-13) b_[i] = 0.0;
    }
    basis_[r] = c;
    ++pivots_;
  }

  std::size_t m_;
  std::size_t n_;
  std::vector<std::vector<double>> a_;
  std::vector<double> b_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

std::string format_bound(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::size_t LinearProgram::add_var(double cost, double lo, double hi) {
  objective.push_back(cost);
  lower.push_back(lo);
  upper.push_back(hi);
  for (auto& row : constraints) row.coeffs.resize(objective.size(), 0.0);
  return objective.size() - 1;
}

void LinearProgram::add_eq(std::vector<double> coeffs, double rhs) {
  coeffs.resize(objective.size(), 0.0);
  constraints.push_back({std::move(coeffs), rhs});
}

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t nv = lp.num_vars();
  if (lp.lower.size() != nv || lp.upper.size() != nv) {
    throw Error(ErrorKind::InvalidArgument, "bounds must match the number of variables");
  }
  for (const auto& row : lp.constraints) {
    if (row.coeffs.size() > nv) throw Error(ErrorKind::InvalidArgument, "constraint row longer than the variable list");
  }

  // Shift and split variables into non-negative columns.
  std::vector<double> offset(nv, 0.0);
  std::vector<Column> cols;
  std::vector<std::pair<std::size_t, double>> boxes;  // column, width
  for (std::size_t j = 0; j < nv; ++j) {
    const double lo = lp.lower[j];
    const double hi = lp.upper[j];
    if (std::isnan(lo) || std::isnan(hi)) throw Error(ErrorKind::InvalidArgument, "NaN bound");
    if (lo > hi) throw Error(ErrorKind::Infeasible, "variable " + std::to_string(j) + " has lower > upper");
    if (std::isfinite(lo) && lo == hi) {
      offset[j] = lo;
    } else if (std::isfinite(lo)) {
      offset[j] = lo;
      cols.push_back({j, 1.0});
      if (std::isfinite(hi)) boxes.emplace_back(cols.size() - 1, hi - lo);
    } else if (std::isfinite(hi)) {
      offset[j] = hi;
      cols.push_back({j, -1.0});
    } else {
      cols.push_back({j, 1.0});
      cols.push_back({j, -1.0});
    }
  }
  const std::size_t structural = cols.size();
  for (std::size_t b = 0; b < boxes.size(); ++b) cols.push_back({kNoVar, 1.0});
  const std::size_t ncols = cols.size();

  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  auto push_row = [&](std::vector<double> row, double r) {
    double scale = 0.0;
    for (double v : row) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) {
      if (std::abs(r) > kFeasTol) throw Error(ErrorKind::Infeasible, "constraint 0 = " + format_bound(r));
      return;
    }
    for (double& v : row) v /= scale;
    r /= scale;
    if (r < 0.0) {
      for (double& v : row) v = -v;
      r = -r;
    }
    rows.push_back(std::move(row));
    rhs.push_back(r);
  };
  for (const auto& con : lp.constraints) {
    std::vector<double> row(ncols, 0.0);
    double r = con.rhs;
    for (std::size_t j = 0; j < con.coeffs.size(); ++j) r -= con.coeffs[j] * offset[j];
    for (std::size_t c = 0; c < structural; ++c) {
      const std::size_t j = cols[c].var;
      if (j < con.coeffs.size()) row[c] = con.coeffs[j] * cols[c].sign;
    }
    push_row(std::move(row), r);
  }
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    std::vector<double> row(ncols, 0.0);
    row[boxes[b].first] = 1.0;
    row[structural + b] = 1.0;
    push_row(std::move(row), boxes[b].second);
  }

  const std::size_t m = rows.size();
  Tableau t(std::move(rows), std::move(rhs), ncols);
  std::vector<double> phase1(ncols + m, 0.0);
  for (std::size_t i = 0; i < m; ++i) phase1[ncols + i] = 1.0;
  t.optimize(phase1, ncols + m);
  const double infeas = t.objective(phase1);
  if (infeas > kFeasTol) {
    throw Error(ErrorKind::Infeasible, "phase one ended with infeasibility " + format_bound(infeas));
  }
  t.expel_artificials();

  std::vector<double> phase2(ncols + m, 0.0);
  for (std::size_t c = 0; c < structural; ++c) phase2[c] = lp.objective[cols[c].var] * cols[c].sign;
  t.optimize(phase2, ncols);

  const auto xs = t.primal();
  LpSolution sol;
  sol.values = offset;
  for (std::size_t c = 0; c < structural; ++c) sol.values[cols[c].var] += cols[c].sign * xs[c];
  for (std::size_t j = 0; j < nv; ++j) sol.values[j] = std::clamp(sol.values[j], lp.lower[j], lp.upper[j]);
  for (std::size_t j = 0; j < nv; ++j) sol.objective += lp.objective[j] * sol.values[j];
  sol.pivots = t.pivots();

  for (const auto& con : lp.constraints) {
    double lhs = 0.0;
    double magnitude = 0.0;
    double scale = std::max(1.0, std::abs(con.rhs));
    for (std::size_t j = 0; j < con.coeffs.size(); ++j) {
      lhs += con.coeffs[j] * sol.values[j];
      magnitude += std::abs(con.coeffs[j] * sol.values[j]);
      scale = std::max(scale, std::abs(con.coeffs[j]));
    }
    scale = std::max(scale, magnitude);
    if (std::abs(lhs - con.rhs) > kFeasTol * scale) {
      throw Error(ErrorKind::NumericalInstability, "equality residual " + format_bound(lhs - con.rhs));
    }
  }
  return sol;
}

std::string dump_lp(const LinearProgram& lp, std::span<const std::size_t> binaries) {
  std::ostringstream out;
  out << "specind-lp 1\n";
  out << "vars " << lp.num_vars() << "\n";
  out << "rows " << lp.constraints.size() << "\n";
  out << "obj";
  for (double c : lp.objective) out << ' ' << format_bound(c);
  out << "\n";
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    out << "bound " << j << ' ' << format_bound(lp.lower[j]) << ' ' << format_bound(lp.upper[j]) << "\n";
  }
  for (std::size_t j : binaries) out << "int " << j << "\n";
  for (const auto& con : lp.constraints) {
    out << "eq";
    for (std::size_t j = 0; j < lp.num_vars(); ++j) out << ' ' << format_bound(j < con.coeffs.size() ? con.coeffs[j] : 0.0);
    out << " = " << format_bound(con.rhs) << "\n";
  }
  return out.str();
}

}  // namespace specind
