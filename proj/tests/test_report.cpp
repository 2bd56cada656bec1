#include <cmath>

#include "doctest.h"
#include "specind/report.hpp"

using namespace specind;

TEST_CASE("spectrum json keeps integer eigenvalues integral") {
  auto s = exact_family_spectrum(FamilySpec::parse("petersen"));
  CHECK(to_json(s).dump() == R"({"theta":[3,1,-2],"mult":[1,5,4],"n":10})");
  auto c5 = to_json(exact_family_spectrum(FamilySpec::parse("cycle:5")));
  CHECK(c5["theta"][1].is_number_float());
}

TEST_CASE("fractions") {
  CHECK(as_fraction(5.0 / 14) == "5/14");
  CHECK(as_fraction(-45.0 / 154) == "-45/154");
  CHECK(as_fraction(3.0) == "3");
  CHECK_FALSE(as_fraction(std::sqrt(2.0)).has_value());
  MeshPolynomial p{{2, 1, 0}, {1, 2.0 / 9, 0}};
  CHECK(to_json(p)["fractions"][1] == "2/9");
}

TEST_CASE("bounds csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  BoundReport ok;
  ok.method = BoundMethod::Hoffman;
  ok.value = 4.0;
  ok.floor_value = 4;
  BoundReport no;
  no.method = BoundMethod::QkRatio;
  no.k = 2;
  no.applicable = false;
  no.reason = "NotPWR: x, y";
  const BoundReport both[] = {ok, no};
  CHECK(bounds_csv(both) ==
        "method,k,value,floor,applicable,reason\r\nhoffman,1,4,4,true,\r\nqk_ratio,2,,,false,\"NotPWR: x, y\"\r\n");
}
