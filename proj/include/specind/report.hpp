#pragma once

#include <optional>
#include <span>
#include <string>

#include "json.hpp"
#include "specind/bounds.hpp"
#include "specind/ch.hpp"
#include "specind/exact.hpp"
#include "specind/polynomial.hpp"
#include "specind/spectrum.hpp"

namespace specind {

using Json = nlohmann::ordered_json;

/// Integers (within 1e-9) become JSON integers, everything else a double.
Json number_json(double v);

/// "p/q" when v is within 1e-9 of p/q with q <= 10^4; integers yield "p".
std::optional<std::string> as_fraction(double v);

Json to_json(const Spectrum& s);
Json to_json(const MeshPolynomial& p);
Json to_json(const CoeffPolynomial& p);
Json to_json(const RegularityReport& r);
Json to_json(const BoundReport& r);
Json to_json(std::span<const BoundReport> reports);
Json to_json(const CHVerdict& v);
Json to_json(const ExactResult& r);

/// One field, quoted when it contains a comma, quote or line break.
std::string csv_field(const std::string& text);
/// Columns: method, k, value, floor, applicable, reason.
std::string bounds_csv(std::span<const BoundReport> reports);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double v);

}  // namespace specind
