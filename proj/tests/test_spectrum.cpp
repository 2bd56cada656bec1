#include <cmath>

#include "doctest.h"
#include "specind/error.hpp"
#include "specind/spectrum.hpp"

using namespace specind;

namespace {

void check_spectrum(const Spectrum& s, std::vector<double> theta, std::vector<int> mult) {
  REQUIRE(s.distinct.size() == theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    CHECK(s.distinct[i] == doctest::Approx(theta[i]).epsilon(1e-9));
    CHECK(s.mults[i] == mult[i]);
  }
}

Graph gen(const char* text) { return generate(FamilySpec::parse(text)); }

}  // namespace

TEST_CASE("numeric spectra") {
  check_spectrum(spectrum(gen("petersen")), {3, 1, -2}, {1, 5, 4});
  check_spectrum(spectrum(gen("complete:3")), {2, -1}, {1, 2});
  check_spectrum(spectrum(gen("odd:5")), {5, 3, 1, -2, -4}, {1, 27, 42, 48, 8});
  auto s = spectrum(gen("petersen"));
  CHECK(s.raw.size() == 10);
  CHECK(s.distinct[0] == 3.0);  // integer snapping
}

TEST_CASE("closed-form spectra") {
  check_spectrum(exact_family_spectrum(FamilySpec::parse("odd:6")), {6, 4, 2, -1, -3, -5}, {1, 44, 165, 132, 110, 10});
  check_spectrum(exact_family_spectrum(FamilySpec::parse("hypercube:5")), {5, 3, 1, -1, -3, -5}, {1, 5, 10, 10, 5, 1});
  check_spectrum(exact_family_spectrum(FamilySpec::parse("kneser:5,2")), {3, 1, -2}, {1, 5, 4});
}

TEST_CASE("closed-form and numeric spectra agree") {
  for (const char* text : {"cycle:9", "cycle:12", "complete:7", "complete_bipartite:3,5", "hypercube:6", "circulant:10;1,2",
                           "circulant:13;1,5", "kneser:7,2", "kneser:8,3", "odd:4", "prism:5", "prism:8",
                           "moebius_ladder:5", "petersen", "circulant:10;5,2"}) {
    auto spec = FamilySpec::parse(text);
    auto a = exact_family_spectrum(spec);
    auto b = spectrum(generate(spec));
    REQUIRE_MESSAGE(a.distinct.size() == b.distinct.size(), text);
    for (std::size_t i = 0; i < a.distinct.size(); ++i) {
      CHECK_MESSAGE(std::abs(a.distinct[i] - b.distinct[i]) < 1e-8, text);
      CHECK_MESSAGE(a.mults[i] == b.mults[i], text);
    }
    CHECK(std::abs(b.moment(1)) <= b.n * 1e-8);
  }
}

TEST_CASE("closed-form errors") {
  CHECK_THROWS_AS(exact_family_spectrum(FamilySpec::parse("circulant:12;2,4")), Error);
  CHECK_THROWS_AS(exact_family_spectrum(FamilySpec::parse("kneser:6,3")), Error);
}

TEST_CASE("grouping ambiguity is reported") {
  try {
    group_eigenvalues({3.0, 1.0 + 5e-8, 1.0, -2.0}, 1e-8);
    FAIL("expected ambiguity");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GroupingAmbiguity);
  }
}

TEST_CASE("pi products") {
  auto pi = pi_products(spectrum(gen("petersen"))).pi;
  CHECK(pi[0] == doctest::Approx(10));
  CHECK(pi[1] == doctest::Approx(6));
  CHECK(pi[2] == doctest::Approx(15));
  auto o6 = pi_products(exact_family_spectrum(FamilySpec::parse("odd:6"))).pi;
  CHECK(o6[0] == doctest::Approx(5544));
  CHECK(o6[5] == doctest::Approx(5544));
  auto k3 = pi_products(spectrum(gen("complete:3"))).pi;
  CHECK(k3[0] == doctest::Approx(3));
  CHECK(k3[1] == doctest::Approx(3));
}

TEST_CASE("regularity classification") {
  auto p = gen("petersen");
  auto r = classify_regularity(p, spectrum(p));
  CHECK(r.is_regular);
  CHECK(r.degree == 3);
  CHECK(r.is_walk_regular);
  CHECK(r.is_distance_regular);
  CHECK(r.intersection_b == std::vector<int>{3, 2});
  CHECK(r.intersection_c == std::vector<int>{1, 1});
  CHECK(r.diameter_equals_d);

  auto prism = gen("circulant:10;5,2");
  auto rp = classify_regularity(prism, spectrum(prism));
  CHECK(rp.is_regular);
  CHECK(rp.pwr_level >= 2);
  CHECK_FALSE(rp.is_distance_regular);

  auto path = parse_edge_list("0 1\n1 2\n");
  auto r3 = classify_regularity(path, spectrum(path));
  CHECK_FALSE(r3.is_regular);
  CHECK(r3.pwr_level == 1);
  CHECK_FALSE(r3.is_distance_regular);
}

TEST_CASE("diagonal statistics") {
  auto p = gen("petersen");
  auto d2 = diagonal_stats(p, {{0, 0, 1}});
  CHECK(d2.w == 3);
  CHECK(d2.W == 3);
  auto d3 = diagonal_stats(p, {{0, 0, 0, 1}});
  CHECK(d3.w == 0);
  CHECK(d3.W == 0);
  auto d0 = diagonal_stats(p, {{1}});
  CHECK(d0.w == 1);
  CHECK(d0.W == 1);

  auto path = parse_edge_list("0 1\n1 2\n");
  auto dp = diagonal_stats(path, {{0, 0, 1}});
  CHECK(dp.w == 1);
  CHECK(dp.W == 2);
}
