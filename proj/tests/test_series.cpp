#include <catch2/catch_amalgamated.hpp>

#include "mapblocks/series.hpp"

using namespace mapblocks;

TEST_CASE("series arithmetic basics", "[series]") {
  RationalSeries a(3), b(3);
  a.coeff = {1, 2, 0, 1};
  b.coeff = {0, 1, 1, 0};
  REQUIRE(mul(a, b).coeff == std::vector<Rational>{0, 1, 3, 2});
  REQUIRE(add(a, b).coeff == std::vector<Rational>{1, 3, 1, 1});
  REQUIRE(shift(b, 1).coeff == std::vector<Rational>{0, 0, 1, 1});
  // (f*g)*h == f*(g*h)
  RationalSeries h(3);
  h.coeff = {2, 0, 1, 5};
  REQUIRE(mul(mul(a, b), h).coeff == mul(a, mul(b, h)).coeff);
}

TEST_CASE("composition identity holds at low order with hand-checked z^2 term", "[series]") {
  // inner = z M(z)^2 = z + 4 z^2 + ...; the z^2 coefficient of C(inner) is
  // C_1 * 4 + C_2 * 1 = 9 = M_2.
  const auto m = maps_series(2);
  const auto inner = shift(mul(m, m), 1);
  REQUIRE(inner.coeff == std::vector<Rational>{0, 1, 4});
  REQUIRE(Rational(2) * 4 + Rational(1) * 1 == 9);
  REQUIRE(compose_check(2));
}

TEST_CASE("composition identity holds exactly through order 24", "[series]") {
  REQUIRE(compose_check(24));
}

TEST_CASE("corrupting C_3 breaks the composition identity", "[series]") {
  auto c = two_connected_series(24);
  c.coeff[3] += 1;
  REQUIRE_FALSE(compose_check_with(maps_series(24), c));
}

TEST_CASE("Lagrange inversion identity", "[series]") {
  REQUIRE(lagrange_check(0));
  REQUIRE(lagrange_check(1));  // (1/3) * 3 C_0^2 C_1 = 2
  for (long n = 2; n <= 12; ++n) REQUIRE(lagrange_check(n));
}
