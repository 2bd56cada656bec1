// specind: spectral bounds on k-independence numbers.
//
//   specind spectrum --family odd:5
//   specind bounds --in petersen.g6 --k 1 --exact
//   specind table t4 --format text
//   specind classify --family kneser:6,2 --k 1
//   specind gen --family hypercube:4
//
// Exit status: 0 on success, 1 when a table has mismatched or failed rows,
// 2 on any error.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specind/bounds.hpp"
#include "specind/ch.hpp"
#include "specind/error.hpp"
#include "specind/exact.hpp"
#include "specind/programs.hpp"
#include "specind/report.hpp"
#include "specind/tables.hpp"

using namespace specind;

namespace {

struct Input {
  std::string family;
  std::string path;
  double tol = kDefaultGroupingTol;
  std::string format = "json";
  long timeout_ms = 120'000;
};

struct Loaded {
  std::optional<Graph> graph;
  Spectrum spec;
  std::string label;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* fam = cmd->add_option("--family", in.family, "family spec, e.g. odd:5, kneser:6,2, circulant:10;1,2");
  auto* file = cmd->add_option("--in", in.path, "graph6 (.g6), edge list, or spectrum (.json) file");
  fam->excludes(file);
  cmd->add_option("--tol", in.tol, "eigenvalue grouping tolerance")->capture_default_str();
  cmd->add_option("--format", in.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
}

Loaded load(const Input& in, bool spectrum_ok = false) {
  Loaded out;
  if (!in.family.empty()) {
    const auto spec = FamilySpec::parse(in.family);
    out.graph = generate(spec);
    out.label = spec.to_string();
    try {
      out.spec = exact_family_spectrum(spec);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoClosedForm) throw;
      out.spec = spectrum(*out.graph, in.tol);
    }
    return out;
  }
  if (in.path.empty()) throw Error(ErrorKind::InvalidArgument, "one of --family or --in is required");
  const std::filesystem::path path(in.path);
  out.label = path.filename().string();
  if (path.extension() == ".json") {
    if (!spectrum_ok) throw Error(ErrorKind::InvalidArgument, "a spectrum file carries no graph: " + in.path);
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::Io, "cannot open " + in.path);
    const Json doc = Json::parse(f);
    out.spec = Spectrum::from_distinct(doc.at("theta").get<std::vector<double>>(), doc.at("mult").get<std::vector<int>>());
    return out;
  }
  out.graph = load_graph(path);
  out.spec = spectrum(*out.graph, in.tol);
  return out;
}

std::string spectrum_text(const Spectrum& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.distinct.size(); ++i) {
    out << (i ? " " : "") << format_number(s.distinct[i]) << '^' << s.mults[i];
  }
  return out.str();
}

int cmd_spectrum(const Input& in) {
  const auto l = load(in, true);
  if (in.format == "json") {
    std::cout << to_json(l.spec).dump(2) << '\n';
  } else if (in.format == "csv") {
    std::cout << "theta,mult\r\n";
    for (std::size_t i = 0; i < l.spec.distinct.size(); ++i) {
      std::cout << format_number(l.spec.distinct[i]) << ',' << l.spec.mults[i] << "\r\n";
    }
  } else {
    std::cout << l.label << ": " << spectrum_text(l.spec) << '\n';
  }
  return 0;
}

std::vector<int> parse_ks(const std::string& text, int diameter) {
  if (text == "all") {
    std::vector<int> ks;
    for (int k = 1; k < std::max(2, diameter); ++k) ks.push_back(k);
    return ks;
  }
  try {
    std::size_t used = 0;
    const int k = std::stoi(text, &used);
    if (used == text.size() && k >= 1) return {k};
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, "--k must be a positive integer or \"all\", got " + text);
}

int cmd_bounds(const Input& in, const std::string& k_text, bool exact, bool no_milp) {
  const auto l = load(in);
  const Graph& g = *l.graph;
  const auto dm = distance_matrix(g);
  BoundsConfig cfg;
  cfg.tol = in.tol;
  cfg.use_milp = !no_milp;
  ExactConfig ecfg;
  ecfg.timeout = std::chrono::milliseconds(in.timeout_ms);

  Json all = Json::array();
  std::string csv;
  std::ostringstream text;
  for (int k : parse_ks(k_text, dm.diameter)) {
    const auto reports = best_bounds(g, l.spec, k, cfg);
    std::optional<long> best;
    for (const auto& r : reports) {
      if (r.applicable && (!best || r.floor_value < *best)) best = r.floor_value;
    }
    std::optional<ExactResult> ex;
    if (exact) ex = alpha_k_exact(g, k, ecfg);

    Json doc;
    doc["graph"] = l.label;
    doc["n"] = g.order();
    doc["k"] = k;
    doc["best"] = best ? Json(*best) : Json(nullptr);
    if (ex) doc["exact"] = to_json(*ex);
    doc["bounds"] = to_json(reports);
    all.push_back(std::move(doc));

    csv += bounds_csv(reports);
    text << l.label << " k=" << k << ": best " << (best ? std::to_string(*best) : "-");
    if (ex) text << ", exact " << ex->alpha_k;
    text << '\n';
    for (const auto& r : reports) {
      text << "  " << method_name(r.method) << ' ';
      if (r.applicable) {
        text << format_number(r.value) << " -> " << r.floor_value << (r.best ? " *" : "");
      } else {
        text << "n/a (" << r.reason << ')';
      }
      text << '\n';
    }
  }
  if (in.format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
  else if (in.format == "csv") std::cout << csv;
  else std::cout << text.str();
  return 0;
}

int cmd_classify(const Input& in, int k, bool exact) {
  const auto l = load(in);
  CHConfig cfg;
  cfg.tol = in.tol;
  cfg.with_exact = exact;
  cfg.exact.timeout = std::chrono::milliseconds(in.timeout_ms);
  const auto v = ch_classify(*l.graph, k, cfg);
  std::string verdict = v.is_ch ? "CH" : "not CH";
  if (v.is_tight_ch) verdict = *v.is_tight_ch ? "tight CH" : (v.is_ch ? "CH, not tight" : "not CH");
  if (in.format == "json") {
    Json doc;
    doc["graph"] = l.label;
    doc["verdict"] = verdict;
    const Json body = to_json(v);
    for (const auto& [key, value] : body.items()) doc[key] = value;
    std::cout << doc.dump(2) << '\n';
  } else if (in.format == "csv") {
    std::cout << "graph,k,inertia,ratio,linearly_related,ch,exact,tight\r\n"
              << csv_field(l.label) << ',' << k << ',' << v.inertia_value << ',' << v.ratio_value << ','
              << (v.linearly_related ? "true" : "false") << ',' << (v.is_ch ? "true" : "false") << ','
              << (v.exact ? std::to_string(*v.exact) : "") << ','
              << (v.is_tight_ch ? (*v.is_tight_ch ? "true" : "false") : "") << "\r\n";
  } else {
    std::cout << l.label << " k=" << k << ": " << verdict << " (inertia " << v.inertia_value << ", ratio "
              << v.ratio_value;
    if (v.exact) std::cout << ", exact " << *v.exact;
    std::cout << ")\n";
  }
  return 0;
}

int cmd_table(const std::string& id, const std::vector<std::string>& rows, unsigned jobs, int max_odd,
              long timeout_ms, const std::string& format) {
  TableConfig cfg;
  cfg.rows = rows;
  cfg.jobs = jobs;
  cfg.max_odd = max_odd;
  cfg.exact.timeout = std::chrono::milliseconds(timeout_ms);
  const auto t = run_table(id, cfg);
  if (format == "json") std::cout << to_json(t).dump(2) << '\n';
  else if (format == "csv") std::cout << table_csv(t);
  else std::cout << table_text(t);
  return t.ok() ? 0 : 1;
}

int cmd_lp(const Input& in, int k, const std::string& program) {
  const auto l = load(in, true);
  if (program == "minor") {
    std::cout << dump_lp(minor_program(l.spec, k));
  } else {
    const auto sp = sign_program(l.spec, k);
    std::cout << dump_lp(sp.lp, sp.binaries);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral bounds on the k-independence number of graphs"};
  app.require_subcommand(1);

  Input in;
  std::string k_text = "1";
  int k = 1;
  bool exact = false;
  bool no_milp = false;

  auto* sp = app.add_subcommand("spectrum", "distinct eigenvalues and multiplicities");
  add_input(sp, in);

  auto* bd = app.add_subcommand("bounds", "every applicable bound on alpha_k");
  add_input(bd, in);
  bd->add_option("--k", k_text, "distance parameter, or \"all\" for 1..D-1")->capture_default_str();
  bd->add_flag("--exact", exact, "append the exact alpha_k");
  bd->add_flag("--no-milp", no_milp, "skip the sign-polynomial MILP");
  bd->add_option("--timeout", in.timeout_ms, "exact search budget in milliseconds")->capture_default_str();

  auto* cl = app.add_subcommand("classify", "k-Cvetkovic-Hoffman classification");
  add_input(cl, in);
  cl->add_option("--k", k, "distance parameter")->capture_default_str();
  cl->add_flag("--exact", exact, "also decide tightness with the exact alpha_k");
  cl->add_option("--timeout", in.timeout_ms, "exact search budget in milliseconds")->capture_default_str();

  std::string table_id;
  std::vector<std::string> rows;
  unsigned jobs = 0;
  int max_odd = 6;
  long table_timeout = 120'000;
  std::string table_format = "text";
  auto* tb = app.add_subcommand("table", "recompute a reference table and compare");
  tb->add_option("id", table_id, "table id")->required()->check(CLI::IsMember(table_ids()));
  tb->add_option("--rows", rows, "comma-separated row ids")->delimiter(',');
  tb->add_option("--jobs", jobs, "worker threads (0 = hardware threads)")->capture_default_str();
  tb->add_option("--max-odd", max_odd, "largest odd graph O_l to evaluate")->capture_default_str();
  tb->add_option("--timeout", table_timeout, "exact search budget per row in milliseconds")->capture_default_str();
  tb->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  std::string gen_family;
  auto* gn = app.add_subcommand("gen", "print a family member as graph6");
  gn->add_option("--family", gen_family, "family spec")->required();

  std::string program = "minor";
  auto* lp = app.add_subcommand("lp", "dump the minor LP or sign MILP");
  add_input(lp, in);
  lp->add_option("--k", k, "distance parameter")->capture_default_str();
  lp->add_option("--program", program, "which program")
      ->check(CLI::IsMember({"minor", "sign"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sp) return cmd_spectrum(in);
    if (*bd) return cmd_bounds(in, k_text, exact, no_milp);
    if (*cl) return cmd_classify(in, k, exact);
    if (*tb) return cmd_table(table_id, rows, jobs, max_odd, table_timeout, table_format);
    if (*gn) {
      std::cout << to_graph6(generate(FamilySpec::parse(gen_family))) << '\n';
      return 0;
    }
    if (*lp) return cmd_lp(in, k, program);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
