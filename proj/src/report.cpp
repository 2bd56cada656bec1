#include "specind/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace specind {

namespace {

bool near_integer(double v) { return std::abs(v) < 9e15 && std::abs(v - std::round(v)) <= 1e-9 * std::max(1.0, std::abs(v)); }

Json numbers(std::span<const double> v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number_json(x));
  return out;
}

}  // namespace

Json number_json(double v) {
  if (near_integer(v)) return static_cast<long long>(std::llround(v));
  return v;
}

std::optional<std::string> as_fraction(double v) {
  if (!std::isfinite(v)) return std::nullopt;
  for (long long q = 1; q <= 10000; ++q) {
    const double p = std::round(v * static_cast<double>(q));
    if (std::abs(p / static_cast<double>(q) - v) <= 1e-9) {
      const auto num = static_cast<long long>(p);
      return q == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(q);
    }
  }
  return std::nullopt;
}

std::string format_number(double v) {
  if (near_integer(v)) return std::to_string(std::llround(v));
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json to_json(const Spectrum& s) {
  Json out;
  out["theta"] = numbers(s.distinct);
  out["mult"] = s.mults;
  out["n"] = s.n;
  return out;
}

Json to_json(const MeshPolynomial& p) {
  Json out;
  out["mesh"] = numbers(p.mesh);
  out["values"] = numbers(p.values);
  Json fr = Json::array();
  bool any = false;
  for (double v : p.values) {
    auto f = as_fraction(v);
    any = any || (f && f->find('/') != std::string::npos);
    fr.push_back(f ? Json(*f) : Json(nullptr));
  }
  if (any) out["fractions"] = std::move(fr);
  return out;
}

Json to_json(const CoeffPolynomial& p) {
  Json out;
  out["coeffs"] = numbers(p.coeffs);
  return out;
}

Json to_json(const RegularityReport& r) {
  Json out;
  out["regular"] = r.is_regular;
  out["degree"] = r.degree;
  out["pwr_level"] = r.pwr_level;
  out["walk_regular"] = r.is_walk_regular;
  out["distance_regular"] = r.is_distance_regular;
  if (r.is_distance_regular) {
    out["intersection_b"] = r.intersection_b;
    out["intersection_c"] = r.intersection_c;
  }
  out["diameter"] = r.diameter;
  out["diameter_equals_d"] = r.diameter_equals_d;
  return out;
}

Json to_json(const BoundReport& r) {
  Json out;
  out["method"] = std::string(method_name(r.method));
  out["k"] = r.k;
  out["applicable"] = r.applicable;
  if (r.applicable) {
    out["value"] = number_json(r.value);
    out["floor"] = r.floor_value;
    out["best"] = r.best;
  } else {
    out["reason"] = r.reason;
  }
  if (!r.detail.empty()) out["detail"] = r.detail;
  if (r.certificate) out["certificate"] = to_json(*r.certificate);
  return out;
}

Json to_json(std::span<const BoundReport> reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

Json to_json(const CHVerdict& v) {
  Json out;
  out["k"] = v.k;
  out["inertia_value"] = v.inertia_value;
  out["ratio_value"] = v.ratio_value;
  out["ratio_raw"] = number_json(v.ratio_raw);
  out["bounds_equal"] = v.bounds_equal;
  out["linearly_related"] = v.linearly_related;
  out["is_ch"] = v.is_ch;
  out["exact"] = v.exact ? Json(*v.exact) : Json(nullptr);
  out["is_tight_ch"] = v.is_tight_ch ? Json(*v.is_tight_ch) : Json(nullptr);
  if (!v.exact_note.empty()) out["exact_note"] = v.exact_note;
  out["fit_scale"] = number_json(v.fit_scale);
  out["fit_residual"] = v.fit_residual;
  out["sign_polynomial"] = to_json(v.sign_poly);
  out["minor_polynomial"] = to_json(v.minor_poly);
  return out;
}

Json to_json(const ExactResult& r) {
  Json out;
  out["k"] = r.k;
  out["alpha_k"] = r.alpha_k;
  out["witness"] = r.witness;
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string bounds_csv(std::span<const BoundReport> reports) {
  std::ostringstream out;
  out << "method,k,value,floor,applicable,reason\r\n";
  for (const auto& r : reports) {
    out << csv_field(std::string(method_name(r.method))) << ',' << r.k << ',';
    if (r.applicable) out << format_number(r.value) << ',' << r.floor_value;
    else out << ',';
    out << ',' << (r.applicable ? "true" : "false") << ',' << csv_field(r.reason) << "\r\n";
  }
  return out.str();
}

}  // namespace specind
