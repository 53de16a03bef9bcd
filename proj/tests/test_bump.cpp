#include <catch2/catch_amalgamated.hpp>

#include "spgl2/bump.hpp"

using namespace spgl2;

TEST_CASE("bump atom evaluation and support") {
  auto f = TestFunction::bump(1.0, 0.5);
  CHECK(f(1.0) == Catch::Approx(std::exp(-1.0)));
  CHECK(f(0.5) == 0.0);
  CHECK(f(1.49) > 0.0);
  CHECK(f(1.5) == 0.0);
  auto s = f.support();
  REQUIRE(s.size() == 1);
  CHECK(s[0].lo == Catch::Approx(0.5));
  CHECK(s[0].hi == Catch::Approx(1.5));
  CHECK_THROWS_AS(TestFunction::bump(0.3, 0.5), std::invalid_argument);
}

TEST_CASE("negative-axis atoms and merging") {
  TestFunction f({BumpAtom{1.0, 0.4, true, 2.0}, BumpAtom{1.2, 0.4, false, 1.0}});
  CHECK(f(-1.0) == Catch::Approx(2.0 * std::exp(-1.0)));
  CHECK(f(1.2) == Catch::Approx(std::exp(-1.0)));
  auto s = f.support();
  REQUIRE(s.size() == 2);
  CHECK(s[0].lo == Catch::Approx(-1.4));
  CHECK(s[1].hi == Catch::Approx(1.6));
}

TEST_CASE("derivative matches finite differences") {
  auto f = TestFunction({BumpAtom{1.0, 0.5, false, 1.3}}, 0.5);  // with |x|^1/2
  const double h = 1e-6;
  for (double x : {0.7, 0.9, 1.1, 1.3}) {
    const double fd = (f(x + h) - f(x - h)) / (2.0 * h);
    CHECK(f.derivative(x) == Catch::Approx(fd).margin(1e-7));
  }
}

TEST_CASE("Mellin transform is entire-ish and rapidly decaying") {
  auto f = TestFunction::bump(1.0, 0.5);
  // decay along a vertical line
  const double m0 = std::abs(f.mellin(Complex{0.25, 0.0}, 0));
  const double m20 = std::abs(f.mellin(Complex{0.25, 20.0}, 0));
  const double m60 = std::abs(f.mellin(Complex{0.25, 60.0}, 0));
  CHECK(m20 < 0.05 * m0);
  CHECK(m60 < 0.2 * m20);
  // large positive and negative abscissae stay finite (compact support off 0)
  CHECK(std::isfinite(std::abs(f.mellin(Complex{30.0, 0.0}, 0))));
  CHECK(std::isfinite(std::abs(f.mellin(Complex{-30.0, 0.0}, 0))));
  // odd part of an even-located positive bump vanishes against sgn
  TestFunction even({BumpAtom{1.0, 0.4, false, 1.0}, BumpAtom{1.0, 0.4, true, 1.0}});
  CHECK(std::abs(even.mellin(Complex{0.3, 5.0}, 1)) < 1e-14);
}

TEST_CASE("interval utilities") {
  IntervalList a = {{0.5, 1.5}};
  IntervalList b = {{1.0, 2.0}};
  auto c = intersect_intervals(a, b);
  REQUIRE(c.size() == 1);
  CHECK(c[0].lo == 1.0);
  CHECK(c[0].hi == 1.5);
  auto d = scale_intervals(a, -2.0);
  CHECK(d[0].lo == Catch::Approx(-3.0));
  CHECK(d[0].hi == Catch::Approx(-1.0));
}
