#include <cmath>

#include "doctest.h"
#include "specind/error.hpp"
#include "specind/lp.hpp"

using namespace specind;

namespace {

ErrorKind kind_of(const LinearProgram& lp) {
  try {
    solve_lp(lp);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("lower bound only") {
  LinearProgram lp;
  lp.add_var(1.0, 2.0, kInf);
  auto sol = solve_lp(lp);
  CHECK(sol.values[0] == doctest::Approx(2.0));
  CHECK(sol.objective == doctest::Approx(2.0));
}

TEST_CASE("degenerate optimum follows Bland's rule") {
  LinearProgram lp;
  lp.add_var(1.0, 0.0, kInf);
  lp.add_var(1.0, 0.0, kInf);
  lp.add_eq({1.0, 1.0}, 1.0);
  auto sol = solve_lp(lp);
  CHECK(sol.objective == doctest::Approx(1.0));
  CHECK(sol.values[0] == doctest::Approx(1.0));
  CHECK(sol.values[1] == doctest::Approx(0.0));
  CHECK(sol.vertex);
}

TEST_CASE("free, upper-bounded and boxed variables") {
  // min -x - 2y + z  s.t. x + y + z = 4, x in [0, 3], y <= 2, z free, z >= ... via row
  LinearProgram lp;
  lp.add_var(-1.0, 0.0, 3.0);
  lp.add_var(-2.0, -kInf, 2.0);
  lp.add_var(1.0, -kInf, kInf);
  lp.add_var(0.0, 0.0, kInf);          // slack
  lp.add_eq({1, 1, 1, 0}, 4.0);
  lp.add_eq({0, 0, 1, -1}, -1.0);      // z - s = -1  =>  z >= -1
  auto sol = solve_lp(lp);
  CHECK(sol.values[0] == doctest::Approx(3.0));
  CHECK(sol.values[1] == doctest::Approx(2.0));
  CHECK(sol.values[2] == doctest::Approx(-1.0));
  CHECK(sol.objective == doctest::Approx(-3 - 4 - 1));
}

TEST_CASE("fixed variables are substituted") {
  LinearProgram lp;
  lp.add_var(1.0, 0.5, 0.5);
  lp.add_var(1.0, 0.0, kInf);
  lp.add_eq({1, 1}, 2.0);
  auto sol = solve_lp(lp);
  CHECK(sol.values[0] == 0.5);
  CHECK(sol.values[1] == doctest::Approx(1.5));
}

TEST_CASE("infeasible and unbounded programs") {
  LinearProgram inf;
  inf.add_var(1.0, 0.0, kInf);
  inf.add_eq({1.0}, -1.0);
  CHECK(kind_of(inf) == ErrorKind::Infeasible);

  LinearProgram crossed;
  crossed.add_var(1.0, 2.0, 1.0);
  CHECK(kind_of(crossed) == ErrorKind::Infeasible);

  LinearProgram unb;
  unb.add_var(-1.0, 0.0, kInf);
  unb.add_var(0.0, 0.0, kInf);
  unb.add_eq({1.0, -1.0}, 0.0);
  CHECK(kind_of(unb) == ErrorKind::Unbounded);
}

TEST_CASE("redundant rows") {
  LinearProgram lp;
  lp.add_var(1.0, 0.0, kInf);
  lp.add_var(2.0, 0.0, kInf);
  lp.add_eq({1, 1}, 3.0);
  lp.add_eq({2, 2}, 6.0);
  auto sol = solve_lp(lp);
  CHECK(sol.objective == doctest::Approx(3.0));
}

TEST_CASE("lp text dump") {
  LinearProgram lp;
  lp.add_var(1.0, 0.0, kInf);
  lp.add_var(-0.5, -1.0, 1.0);
  lp.add_eq({1, 1}, 1.0);
  std::size_t ints[] = {1};
  CHECK(dump_lp(lp, ints) ==
        "specind-lp 1\nvars 2\nrows 1\nobj 1 -0.5\nbound 0 0 inf\nbound 1 -1 1\nint 1\neq 1 1 = 1\n");
}
