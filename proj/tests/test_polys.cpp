#include <cmath>

#include "doctest.h"
#include "specind/error.hpp"
#include "specind/polys.hpp"

using namespace specind;

namespace {

Spectrum exact(const char* text) { return exact_family_spectrum(FamilySpec::parse(text)); }

// Dense p(A) for small graphs.
std::vector<double> evaluate_on_adjacency(const Graph& g, const CoeffPolynomial& p) {
  const std::size_t n = g.order();
  std::vector<double> acc(n * n, 0.0);
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    std::vector<double> next(n * n, 0.0);
    for (std::size_t u = 0; u < n; ++u)
      for (Vertex w : g.neighbors(static_cast<Vertex>(u)))
        for (std::size_t v = 0; v < n; ++v) next[u * n + v] += acc[static_cast<std::size_t>(w) * n + v];
    for (std::size_t u = 0; u < n; ++u) next[u * n + u] += p.coeffs[i];
    acc = std::move(next);
  }
  return acc;
}

void check_values(const MeshPolynomial& f, std::vector<double> expect) {
  REQUIRE(f.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(std::abs(f.values[i] - expect[i]) < 1e-12);
}

}  // namespace

TEST_CASE("predistance polynomials of small graphs") {
  auto k3 = predistance_polynomials(spectrum(generate(FamilySpec::parse("complete:3"))));
  REQUIRE(k3.polys.size() == 2);
  CHECK(k3.polys[1].coeffs[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(k3.polys[1].coeffs[1] == doctest::Approx(1.0));
  CHECK(k3.norms[1] == doctest::Approx(2.0));

  auto pet = predistance_polynomials(exact("petersen"));
  CHECK(pet.values[1].values == std::vector<double>{3, 1, -2});
  CHECK(pet.values[2].values[0] == doctest::Approx(6.0));
}

TEST_CASE("predistance polynomials are distance polynomials on distance-regular graphs") {
  for (const char* text : {"petersen", "odd:4", "hypercube:4", "cycle:7"}) {
    auto g = generate(FamilySpec::parse(text));
    auto fam = predistance_polynomials(spectrum(g));
    auto dm = distance_matrix(g);
    const std::size_t n = g.order();
    for (std::size_t i = 0; i < fam.polys.size(); ++i) {
      auto m = evaluate_on_adjacency(g, fam.polys[i]);
      double err = 0.0;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          const double want = dm.at(static_cast<Vertex>(u), static_cast<Vertex>(v)) == static_cast<int>(i) ? 1.0 : 0.0;
          err = std::max(err, std::abs(m[u * n + v] - want));
        }
      CHECK_MESSAGE(err < 1e-8, text << " p_" << i);
    }
  }
}

TEST_CASE("predistance family invariants") {
  for (const char* text : {"odd:6", "odd:5", "hypercube:7", "cycle:40", "prism:9", "kneser:8,3", "circulant:17;1,3,4"}) {
    auto s = exact(text);
    auto fam = predistance_polynomials(s);
    const auto h = hoffman_mesh(s);
    for (std::size_t i = 0; i < fam.values.size(); ++i) {
      const auto& pi = fam.values[i].values;
      CHECK(pi[0] == doctest::Approx(fam.norms[i]).epsilon(1e-8));
      for (std::size_t j = 0; j < i; ++j) {
        const double ip = spectral_inner(s, pi, fam.values[j].values);
        CHECK(std::abs(ip) <= 1e-8 * std::sqrt(fam.norms[i] * fam.norms[j]));
      }
    }
    auto total = fam.partial_sum(s.d());
    for (std::size_t t = 0; t < total.size(); ++t) total.values[t] += 1.0;
    for (std::size_t t = 0; t < total.size(); ++t) CHECK(std::abs(total.values[t] - h.values[t]) < 1e-8 * s.n);
    for (int k = 1; k <= s.d(); ++k) {
      auto q = fam.partial_sum(k);
      for (std::size_t t = 1; t < q.size(); ++t) CHECK(q.values[0] >= q.values[t] - 1e-9);
    }
  }
}

TEST_CASE("hoffman polynomial") {
  auto pet = exact("petersen");
  auto h = hoffman_polynomial(pet);
  REQUIRE(h.coeffs.size() == 3);
  CHECK(h.coeffs[0] == doctest::Approx(-2));
  CHECK(h.coeffs[1] == doctest::Approx(1));
  CHECK(h.coeffs[2] == doctest::Approx(1));
  CHECK(h(3.0) == doctest::Approx(10));
  auto j = evaluate_on_adjacency(generate(FamilySpec::parse("petersen")), h);
  for (double v : j) CHECK(v == doctest::Approx(1.0));

  auto k3 = hoffman_polynomial(exact("complete:3"));
  CHECK(k3.coeffs[0] == doctest::Approx(1));
  CHECK(k3.coeffs[1] == doctest::Approx(1));
  CHECK(hoffman_polynomial(exact("odd:5"))(5.0) == doctest::Approx(126));
}

TEST_CASE("closed-form minor polynomials on odd graphs") {
  auto o5 = exact("odd:5");
  auto o6 = exact("odd:6");

  auto f1 = minor_closed_form(o5, 1);
  CHECK(f1.rule == "mp1");
  check_values(f1.poly, {1, 7.0 / 9, 5.0 / 9, 2.0 / 9, 0});

  auto f2 = minor_closed_form(o5, 2);
  check_values(f2.poly, {1, 5.0 / 14, 0, 0, 5.0 / 14});
  CHECK(spectral_trace(o5, f2.poly.values) == doctest::Approx(13.5));

  auto f3 = minor_closed_form(o5, 3, 0.0);
  CHECK(f3.rule == "mp4");
  check_values(f3.poly, {1, 5.0 / 18, 0, 0, 0});
  CHECK(spectral_trace(o5, f3.poly.values) == doctest::Approx(8.5));
  CHECK(f3.mp3_matches);

  auto g3 = minor_closed_form(o6, 3, 0.0);
  check_values(g3.poly, {1, 45.0 / 154, 0, 0, 5.0 / 77, 0});
  CHECK(spectral_trace(o6, g3.poly.values) == doctest::Approx(21));

  auto g2 = minor_closed_form(o6, 2);
  CHECK(spectral_trace(o6, g2.poly.values) == doctest::Approx(66));

  auto g4 = minor_closed_form(o6, 4);
  CHECK(g4.rule == "mp5");
  CHECK(g4.selected == 5);
  check_values(g4.poly, {1, 0, 0, 0, 0, 1});
  CHECK(spectral_trace(o6, g4.poly.values) == doctest::Approx(11));

  auto g5 = minor_closed_form(o6, 5);
  CHECK(g5.rule == "mp6");
  CHECK(spectral_trace(o6, g5.poly.values) == doctest::Approx(1));
}

TEST_CASE("closed forms respect their degree") {
  for (const char* text : {"odd:5", "odd:6", "hypercube:6", "kneser:9,3", "cycle:11", "prism:7"}) {
    auto s = exact(text);
    for (int k = 0; k <= s.d(); ++k) {
      MinorClosedForm f;
      try {
        f = minor_closed_form(s, k, 0.0);
      } catch (const Error& e) {
        CHECK_MESSAGE((e.kind() == ErrorKind::UnsupportedK || e.kind() == ErrorKind::NoValidTheta), text << " k=" << k);
        continue;
      }
      CHECK_MESSAGE(mesh_degree(f.poly) <= k, text << " k=" << k);
      CHECK(f.poly.values[0] == doctest::Approx(1.0));
      if (k >= 1) {
        double lo = 1e300;
        for (std::size_t i = 1; i < f.poly.size(); ++i) lo = std::min(lo, f.poly.values[i]);
        CHECK(std::abs(lo) < 1e-12);
      }
    }
  }
}

TEST_CASE("mp1 trace equals the Hoffman ratio") {
  for (const char* text : {"petersen", "odd:6", "cycle:5", "hypercube:5", "circulant:10;1,2", "kneser:7,3"}) {
    auto s = exact(text);
    auto f1 = minor_closed_form(s, 1);
    const double want = s.n * (-s.theta_min()) / (s.theta0() - s.theta_min());
    CHECK(spectral_trace(s, f1.poly.values) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("closed-form errors") {
  auto o6 = exact("odd:6");
  CHECK_THROWS_AS(minor_closed_form(o6, 3), Error);
  try {
    minor_closed_form(exact("odd:8"), 4);
    FAIL("expected UnsupportedK");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedK);
  }
}
