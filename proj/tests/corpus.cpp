#include "corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "specind/bounds.hpp"
#include "specind/ch.hpp"
#include "specind/error.hpp"
#include "specind/exact.hpp"
#include "specind/polys.hpp"
#include "specind/report.hpp"
#include "specind/tables.hpp"

using namespace specind;

namespace {

const char* const kFamilies[] = {
    "complete:4",        "complete:7",       "cycle:5",         "cycle:6",        "cycle:7",
    "cycle:8",           "cycle:9",          "cycle:12",        "cycle:15",       "complete_bipartite:2,3",
    "complete_bipartite:3,3", "complete_bipartite:4,6", "hypercube:3", "hypercube:4", "hypercube:5",
    "hypercube:6",       "hypercube:7",      "hypercube:8",     "hypercube:9",    "circulant:10;1,2",
    "circulant:13;1,5",  "circulant:17;1,2,4,8", "circulant:12;1,4", "kneser:6,2", "kneser:7,2",
    "kneser:8,2",        "kneser:8,3",       "odd:3",           "odd:4",          "odd:5",
    "odd:6",             "prism:5",          "prism:6",         "prism:8",        "moebius_ladder:5",
    "moebius_ladder:7",  "moebius_ladder:8", "petersen",
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::vector<CorpusGraph> generator_corpus() {
  std::vector<CorpusGraph> out;
  for (const char* text : kFamilies) {
    const auto spec = FamilySpec::parse(text);
    auto g = generate(spec);
    Spectrum s;
    try {
      s = exact_family_spectrum(spec);
    } catch (const Error&) {
      s = spectrum(g);
    }
    out.push_back({text, std::move(g), std::move(s)});
  }
  return out;
}

std::vector<CorpusGraph> load_corpus() {
  auto out = generator_corpus();
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(default_fixture_dir() / "graphs")) {
    if (entry.path().extension() == ".g6") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    auto g = load_graph(path);
    auto s = spectrum(g);
    out.push_back({path.stem().string(), std::move(g), std::move(s)});
  }
  return out;
}

PropertyOutcome check_soundness(const std::vector<CorpusGraph>& corpus, std::size_t max_n) {
  PropertyOutcome out{"soundness", 0, {}};
  for (const auto& c : corpus) {
    if (c.graph.order() > max_n) continue;
    const int diameter = distance_matrix(c.graph).diameter;
    for (int k = 1; k < diameter; ++k) {
      const int exact = alpha_k_exact(c.graph, k).alpha_k;
      for (const auto& r : best_bounds(c.graph, c.spec, k)) {
        if (r.applicable && r.floor_value < exact) {
          out.failures.push_back(c.name + " k=" + std::to_string(k) + " " + std::string(method_name(r.method)) + " " +
                                 std::to_string(r.floor_value) + " < " + std::to_string(exact));
        }
      }
      ++out.checked;
    }
  }
  return out;
}

PropertyOutcome check_predistance(const std::vector<CorpusGraph>& corpus) {
  PropertyOutcome out{"predistance", 0, {}};
  for (const auto& c : corpus) {
    if (!c.graph.is_regular()) continue;
    const auto& s = c.spec;
    const auto fam = predistance_polynomials(s);
    const auto h = hoffman_mesh(s);
    auto fail = [&](const std::string& what) { out.failures.push_back(c.name + ": " + what); };
    for (std::size_t i = 0; i < fam.values.size(); ++i) {
      const auto& p = fam.values[i].values;
      if (std::abs(p[0] - fam.norms[i]) > 1e-8 * std::max(1.0, fam.norms[i])) {
        fail("p_" + std::to_string(i) + "(theta_0) = " + fmt(p[0]) + " vs " + fmt(fam.norms[i]));
      }
      for (std::size_t j = 0; j < i; ++j) {
        const double ip = spectral_inner(s, p, fam.values[j].values);
        if (std::abs(ip) > 1e-8 * std::sqrt(fam.norms[i] * fam.norms[j])) {
          fail("<p_" + std::to_string(i) + ", p_" + std::to_string(j) + "> = " + fmt(ip));
        }
      }
    }
    const auto total = fam.partial_sum(s.d());
    for (std::size_t t = 0; t < total.size(); ++t) {
      if (std::abs(total.values[t] + 1.0 - h.values[t]) > 1e-8 * static_cast<double>(s.n)) {
        fail("sum p_i differs from H at theta_" + std::to_string(t));
      }
    }
    for (int k = 1; k <= s.d(); ++k) {
      const auto q = fam.partial_sum(k);
      for (std::size_t t = 1; t < q.size(); ++t) {
        if (q.values[0] < q.values[t] - 1e-9 * std::max(1.0, std::abs(q.values[0]))) {
          fail("q'_" + std::to_string(k) + " exceeds its theta_0 value at theta_" + std::to_string(t));
        }
      }
    }
    ++out.checked;
  }
  return out;
}

PropertyOutcome check_excess(const std::vector<CorpusGraph>& corpus) {
  PropertyOutcome out{"spectral excess", 0, {}};
  for (const auto& c : corpus) {
    if (!c.graph.is_regular()) continue;
    const auto dm = distance_matrix(c.graph);
    const bool drg = classify_regularity(c.graph, c.spec, dm).is_distance_regular;
    const double spectral = spectral_excess(c.spec, pi_products(c.spec));
    const double mean = mean_excess(dm, c.spec.d());
    // Relative: when d > D the mean excess is 0 and the spectral excess tiny.
    const bool equal = std::abs(spectral - mean) <= 1e-6 * std::max(spectral, mean);
    if (equal != drg) {
      out.failures.push_back(c.name + ": excess " + fmt(spectral) + " vs mean " + fmt(mean) +
                             (drg ? " on a distance-regular graph" : " on a non-distance-regular graph"));
    }
    ++out.checked;
  }
  return out;
}

PropertyOutcome check_determinism(const std::vector<CorpusGraph>& corpus, std::size_t max_n) {
  PropertyOutcome out{"determinism", 0, {}};
  for (const auto& c : corpus) {
    if (c.graph.order() > max_n) continue;
    const int diameter = distance_matrix(c.graph).diameter;
    for (int k = 1; k < std::min(diameter, 4); ++k) {
      const auto a = to_json(best_bounds(c.graph, c.spec, k)).dump();
      const auto b = to_json(best_bounds(c.graph, c.spec, k)).dump();
      if (a != b) out.failures.push_back(c.name + " k=" + std::to_string(k));
      ++out.checked;
    }
  }
  return out;
}

PropertyOutcome check_pi_identities(const std::vector<CorpusGraph>& corpus) {
  PropertyOutcome out{"pi identities", 0, {}};
  for (const auto& c : corpus) {
    if (c.spec.d() < 1) continue;
    const auto pi = pi_products(c.spec).pi;
    double even = 0.0, odd = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < pi.size(); ++i) {
      const double t = pi[0] / pi[i];
      (i % 2 == 0 ? even : odd) += t;
      scale = std::max(scale, std::abs(t));
    }
    if (std::abs(even - odd) > 1e-7 * std::max(1.0, scale)) {
      out.failures.push_back(c.name + ": even sum " + fmt(even) + " vs odd sum " + fmt(odd));
    }
    if (c.name.rfind("hypercube:", 0) == 0) {
      for (int j = 1; j <= c.spec.d(); j += 2) {
        const auto ju = static_cast<std::size_t>(j);
        const double ratio = c.spec.mults[ju] * pi[ju] / pi[0];
        if (std::abs(ratio - 1.0) > 1e-9) out.failures.push_back(c.name + ": m_j pi_j / pi_0 = " + fmt(ratio));
      }
    }
    ++out.checked;
  }
  return out;
}
