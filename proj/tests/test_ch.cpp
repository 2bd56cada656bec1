#include <cmath>
#include <random>

#include "doctest.h"
#include "specind/ch.hpp"
#include "specind/error.hpp"

using namespace specind;

namespace {

Graph make(const char* text) { return generate(FamilySpec::parse(text)); }
Spectrum exact(const char* text) { return exact_family_spectrum(FamilySpec::parse(text)); }

}  // namespace

TEST_CASE("CH classification") {
  CHConfig cfg;
  cfg.with_exact = true;

  auto kn = ch_classify(make("kneser:6,2"), 1, cfg);
  CHECK(kn.inertia_value == 5);
  CHECK(kn.ratio_value == 5);
  CHECK(kn.is_ch);
  CHECK(kn.is_tight_ch == true);

  auto o6 = ch_classify(make("odd:6"), 4, cfg);
  CHECK(o6.inertia_value == 11);
  CHECK(o6.ratio_value == 11);
  CHECK(o6.linearly_related);
  CHECK(o6.fit_residual < 1e-6);
  CHECK(o6.is_tight_ch == true);

  auto o5 = ch_classify(make("odd:5"), 3, cfg);
  CHECK(o5.inertia_value == 8);
  CHECK(o5.ratio_value == 8);
  CHECK(o5.exact == 7);
  CHECK(o5.is_tight_ch == false);

  for (const char* text : {"hypercube:3", "cycle:6"}) {
    auto g = make(text);
    auto v = ch_classify(g, spectrum(g).d() - 1, cfg);
    CHECK_MESSAGE(v.is_tight_ch == true, text);
  }
  CHECK_THROWS_AS(ch_classify(make("complete_bipartite:2,3"), 1), Error);
}

TEST_CASE("simplex geometry") {
  auto q3 = exact("hypercube:3");
  auto pi = pi_products(q3);
  auto g = simplex_geometry(q3, pi, 3, 2);
  CHECK(g.S == doctest::Approx(0.0));
  CHECK(g.L > 0.0);
  // Each projection has squared norm m_i / n.
  auto one = simplex_geometry(q3, pi, 1, 1);
  CHECK(one.R == 0.0);
  CHECK(one.S == doctest::Approx(std::sqrt(3.0 / 8)));
  CHECK_THROWS_AS(simplex_geometry(q3, pi, 3, 3), Error);

  std::mt19937 rng(7);
  int checked = 0;
  while (checked < 100) {
    std::uniform_int_distribution<int> dd(2, 6);
    const int d = dd(rng);
    std::vector<double> theta;
    std::vector<int> mult;
    double t = 10.0;
    for (int i = 0; i <= d; ++i) {
      theta.push_back(t);
      t -= std::uniform_real_distribution<double>(0.5, 3.0)(rng);
      mult.push_back(i == 0 ? 1 : std::uniform_int_distribution<int>(1, 30)(rng));
    }
    auto s = Spectrum::from_distinct(theta, mult, false);
    auto p = pi_products(s);
    const int i = std::uniform_int_distribution<int>(0, d)(rng);
    const int r = std::uniform_int_distribution<int>(2, 5)(rng);
    try {
      auto geo = simplex_geometry(s, p, i, r);
      CHECK(geo.L * geo.L == doctest::Approx(2.0 * r / (r - 1) * geo.R * geo.R));
      ++checked;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NegativeRadicand);
    }
  }
}

TEST_CASE("multiplicity feasibility") {
  auto q3 = exact("hypercube:3");
  auto rep = multiplicity_feasibility(q3, pi_products(q3), 2);
  CHECK(rep.all_equal);
  CHECK(rep.max_r == 2);
  auto pet = exact("petersen");
  auto pr = multiplicity_feasibility(pet, pi_products(pet), 2);
  CHECK(pr.all_hold);
  for (const auto& c : pr.checks) CHECK_FALSE(c.equality);
  auto r1 = multiplicity_feasibility(pet, pi_products(pet), 1);
  for (const auto& c : r1.checks) {
    if (c.index % 2 == 1) CHECK(c.required == 0.0);
  }
}

TEST_CASE("spectral excess") {
  auto pet = make("petersen");
  auto s = spectrum(pet);
  CHECK(spectral_excess(s, pi_products(s)) == doctest::Approx(6.0));
  CHECK(mean_excess(pet) == doctest::Approx(6.0));

  auto prism = make("prism:5");
  auto ps = spectrum(prism);
  CHECK(std::abs(spectral_excess(ps, pi_products(ps)) - mean_excess(prism)) > 1e-6);

  auto k6 = make("complete:6");
  auto ks = spectrum(k6);
  CHECK(spectral_excess(ks, pi_products(ks)) == doctest::Approx(5.0));
  CHECK(mean_excess(k6) == doctest::Approx(5.0));
}

TEST_CASE("antipodal check") {
  for (const char* text : {"hypercube:3", "cycle:6"}) {
    auto g = make(text);
    auto s = spectrum(g);
    auto v = antipodal_check(g, s, pi_products(s));
    CHECK_MESSAGE(v.antipodal, text);
    CHECK(v.r == 2);
  }
  auto pet = make("petersen");
  auto ps = spectrum(pet);
  auto v = antipodal_check(pet, ps, pi_products(ps));
  CHECK_FALSE(v.antipodal);
  CHECK(v.r == 7);
  CHECK(v.distance_regular);
}

TEST_CASE("strongly regular tightness") {
  auto pet = make("petersen");
  auto w = alpha_k_exact(pet, 1).witness;
  CHECK(srg_tightness_check(pet, w));
  auto c5 = make("cycle:5");
  CHECK_FALSE(srg_tightness_check(c5, alpha_k_exact(c5, 1).witness));
  auto k33 = make("complete_bipartite:3,3");
  const Vertex part[] = {0, 1, 2};
  CHECK(srg_tightness_check(k33, part));
  CHECK_THROWS_AS(srg_tightness_check(make("prism:5"), alpha_k_exact(make("prism:5"), 1).witness), Error);
}
