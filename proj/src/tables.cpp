#include "specind/tables.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "specind/bounds.hpp"
#include "specind/error.hpp"
#include "specind/polys.hpp"
#include "specind/programs.hpp"

#ifndef SPECIND_DEFAULT_FIXTURE_DIR
#define SPECIND_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace specind {

namespace {

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Io, path.string() + ": " + e.what());
  }
}

double parse_number(const Json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto text = v.get<std::string>();
    const auto slash = text.find('/');
    if (slash == std::string::npos) return std::stod(text);
    return std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
  }
  throw Error(ErrorKind::InvalidArgument, "expected a number, got " + v.dump());
}

double column_tol(const std::string& column, double tol) {
  if (column == "sign_trace") return std::max(tol, 1e-7);
  if (column == "trace") return std::max(tol, 1e-8);
  return tol;
}

bool values_match(const Json& expected, const Json& computed, double tol) {
  if (computed.is_null()) return false;
  if (expected.is_array()) {
    if (!computed.is_array() || computed.size() != expected.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (!values_match(expected[i], computed[i], tol)) return false;
    }
    return true;
  }
  if (expected.is_boolean()) return computed == expected;
  const double e = parse_number(expected);
  const double c = parse_number(computed);
  return std::abs(e - c) <= tol * std::max(1.0, std::abs(e));
}

Json numbers(std::span<const double> v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number_json(x));
  return out;
}

// Lazily computed inputs of one row.
struct RowContext {
  std::optional<Graph> graph;
  Spectrum spec;
  int k = 1;
  const TableConfig* cfg = nullptr;
  std::optional<MinorSolution> minor;
  std::optional<MilpSolution> sign;

  const MinorSolution& minor_solution() {
    if (!minor) minor = minor_polynomial(spec, k);
    return *minor;
  }
  const MilpSolution& sign_solution() {
    if (!sign) sign = sign_polynomial(spec, k);
    return *sign;
  }
};

Json srg_params(const Spectrum& s) {
  if (s.d() != 2) throw Error(ErrorKind::NotSRG, "spectrum has " + std::to_string(s.d() + 1) + " distinct eigenvalues");
  const double k = s.distinct[0], r = s.distinct[1], t = s.distinct[2];
  const double lambda = k + r + t + r * t;
  const double mu = k + r * t;
  return Json::array({static_cast<long long>(s.n), number_json(k), number_json(lambda), number_json(mu)});
}

Json compute_column(const std::string& column, RowContext& ctx) {
  const Spectrum& s = ctx.spec;
  if (column == "alpha") {
    if (ctx.k == 0) return static_cast<long long>(s.n);
    if (!ctx.graph) return nullptr;
    return alpha_k_exact(*ctx.graph, ctx.k, ctx.cfg->exact).alpha_k;
  }
  if (column == "inertia") return cvetkovic_bound(s.raw).floor_value;
  if (column == "ratio_floor") return hoffman_bound(s.n, s.theta0(), s.theta_min()).floor_value;
  if (column == "params") return srg_params(s);
  if (column == "bound") {
    if (ctx.k == 0) return static_cast<long long>(s.n);
    if (!ctx.graph) return nullptr;
    std::optional<long> best;
    for (const auto& r : best_bounds(*ctx.graph, s, ctx.k)) {
      if (r.applicable && (!best || r.floor_value < *best)) best = r.floor_value;
    }
    return best ? Json(*best) : Json(nullptr);
  }
  if (column == "values") return numbers(ctx.minor_solution().poly.values);
  if (column == "trace") return number_json(ctx.minor_solution().trace);
  if (column == "minor_coeffs") return numbers(mesh_to_coeffs(ctx.minor_solution().poly).coeffs);
  if (column == "objective") return ctx.sign_solution().objective;
  if (column == "sign_values") return numbers(ctx.sign_solution().sign_poly.values);
  if (column == "sign_trace") {
    const auto& v = ctx.sign_solution().sign_poly.values;
    double tr = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) tr += s.mults[i] * v[i];
    return number_json(tr);
  }
  if (column == "prop") {
    if (!ctx.graph) return nullptr;
    return qk_bounds(*ctx.graph, s, predistance_polynomials(s), ctx.k).second.floor_value;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown column " + column);
}

Spectrum load_spectrum(const std::filesystem::path& path) {
  const Json doc = read_json(path);
  return Spectrum::from_distinct(doc.at("theta").get<std::vector<double>>(), doc.at("mult").get<std::vector<int>>(), true);
}

TableRow evaluate_row(const Json& row, int default_k, const std::filesystem::path& dir, const TableConfig& cfg) {
  TableRow out;
  out.id = row.at("id").get<std::string>();
  out.label = row.value("label", out.id);
  out.note = row.value("note", "");
  const int k = row.value("k", default_k);
  const Json& expected = row.at("expected");
  for (const auto& [column, value] : expected.items()) out.cells.push_back({column, value, nullptr, false});

  auto skip = [&](std::string why) {
    out.status = RowStatus::Skipped;
    out.note = out.note.empty() ? why : why + "; " + out.note;
    return out;
  };
  if (row.contains("disabled")) return skip(row["disabled"].get<std::string>());

  RowContext ctx;
  ctx.k = k;
  ctx.cfg = &cfg;
  try {
    if (row.contains("family")) {
      const auto spec = FamilySpec::parse(row["family"].get<std::string>());
      if (spec.family == Family::Odd && spec.params.at(0) > cfg.max_odd) {
        return skip("above size cap (odd:" + std::to_string(cfg.max_odd) + ")");
      }
      ctx.graph = generate(spec);
      try {
        ctx.spec = exact_family_spectrum(spec);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoClosedForm) throw;
        ctx.spec = spectrum(*ctx.graph);
      }
    } else if (row.contains("graph")) {
      const auto path = dir / "graphs" / row["graph"].get<std::string>();
      if (!std::filesystem::exists(path)) return skip("fixture missing: graphs/" + row["graph"].get<std::string>());
      ctx.graph = load_graph(path);
      ctx.spec = spectrum(*ctx.graph);
    } else if (row.contains("spectrum")) {
      const auto path = dir / "spectra" / row["spectrum"].get<std::string>();
      if (!std::filesystem::exists(path)) return skip("fixture missing: spectra/" + row["spectrum"].get<std::string>());
      ctx.spec = load_spectrum(path);
    } else {
      throw Error(ErrorKind::InvalidArgument, "row " + out.id + " has no family, graph or spectrum");
    }

    bool any = false, all = true;
    for (auto& cell : out.cells) {
      cell.computed = compute_column(cell.column, ctx);
      if (cell.computed.is_null()) continue;
      any = true;
      cell.match = values_match(cell.expected, cell.computed, column_tol(cell.column, cfg.tol));
      all = all && cell.match;
    }
    out.status = !any ? RowStatus::Skipped : all ? RowStatus::Match : RowStatus::Mismatch;
  } catch (const std::exception& e) {
    out.status = RowStatus::Failed;
    out.note = e.what();
  }
  return out;
}

std::string cell_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + cell_text(v[i]);
    return out + "]";
  }
  return v.dump();
}

}  // namespace

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("SPECIND_FIXTURES"); env && *env) return env;
  return SPECIND_DEFAULT_FIXTURE_DIR;
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = {"t1", "t2", "minor-odd", "sign-odd6", "t4", "t5"};
  return ids;
}

std::string_view status_name(RowStatus s) noexcept {
  switch (s) {
    case RowStatus::Match: return "match";
    case RowStatus::Mismatch: return "MISMATCH";
    case RowStatus::Skipped: return "skipped";
    case RowStatus::Failed: return "FAILED";
  }
  return "?";
}

bool TableResult::ok() const noexcept {
  return std::none_of(rows.begin(), rows.end(), [](const TableRow& r) {
    return r.status == RowStatus::Mismatch || r.status == RowStatus::Failed;
  });
}

TableResult run_table(std::string_view id, const TableConfig& cfg) {
  const auto& ids = table_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw Error(ErrorKind::UnknownTable, std::string(id));
  }
  const auto dir = cfg.fixture_dir.empty() ? default_fixture_dir() : cfg.fixture_dir;
  const auto path = dir / "tables" / (std::string(id) + ".json");
  const Json doc = read_json(path);

  TableResult out;
  out.table = std::string(id);
  out.title = doc.value("title", "");
  const int default_k = doc.value("k", 1);

  std::vector<const Json*> selected;
  for (const auto& row : doc.at("rows")) {
    const auto rid = row.at("id").get<std::string>();
    if (cfg.rows.empty() || std::find(cfg.rows.begin(), cfg.rows.end(), rid) != cfg.rows.end()) {
      selected.push_back(&row);
    }
  }
  for (const auto& want : cfg.rows) {
    const bool found = std::any_of(selected.begin(), selected.end(),
                                   [&](const Json* r) { return r->at("id").get<std::string>() == want; });
    if (!found) throw Error(ErrorKind::InvalidArgument, "table " + out.table + " has no row " + want);
  }

  out.rows.resize(selected.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      out.rows[i] = evaluate_row(*selected[i], default_k, dir, cfg);
    }
  };
  unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, selected.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

Json to_json(const TableResult& t) {
  Json out;
  out["table"] = t.table;
  out["title"] = t.title;
  out["ok"] = t.ok();
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row;
    row["id"] = r.id;
    row["label"] = r.label;
    row["status"] = std::string(status_name(r.status));
    if (!r.note.empty()) row["note"] = r.note;
    Json cells = Json::array();
    for (const auto& c : r.cells) {
      cells.push_back({{"column", c.column}, {"expected", c.expected}, {"computed", c.computed}, {"match", c.match}});
    }
    row["cells"] = std::move(cells);
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out;
}

std::string table_text(const TableResult& t) {
  std::ostringstream out;
  out << t.table;
  if (!t.title.empty()) out << ": " << t.title;
  out << '\n';
  for (const auto& r : t.rows) {
    out << std::left << std::setw(22) << r.id << std::setw(9) << status_name(r.status);
    for (const auto& c : r.cells) {
      out << "  " << c.column << '=' << cell_text(c.computed);
      if (!c.computed.is_null() && !c.match) out << " (expected " << cell_text(c.expected) << ')';
    }
    if (!r.note.empty()) out << "  # " << r.note;
    out << '\n';
  }
  return out.str();
}

std::string table_csv(const TableResult& t) {
  std::ostringstream out;
  out << "table,row,status,column,expected,computed,match\r\n";
  for (const auto& r : t.rows) {
    for (const auto& c : r.cells) {
      out << csv_field(t.table) << ',' << csv_field(r.id) << ',' << status_name(r.status) << ',' << csv_field(c.column) << ','
          << csv_field(cell_text(c.expected)) << ',' << csv_field(cell_text(c.computed)) << ','
          << (c.match ? "true" : "false") << "\r\n";
    }
  }
  return out.str();
}

}  // namespace specind
