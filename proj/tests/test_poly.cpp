#include "severi/poly.hpp"

#include "doctest.h"

using namespace severi;

namespace {
std::string plain_name(VarId v) { return "x" + std::to_string(v); }
}  // namespace

TEST_CASE("arithmetic and cancellation") {
  Poly x = Poly::variable(0), y = Poly::variable(1);
  Poly p = x * x - y;
  Poly q = y - x * x;
  CHECK((p + q).is_zero());
  Poly r = (x + y) * (x - y);
  Poly xx_minus_yy = x * x - y * y;
  CHECK(r == xx_minus_yy);
  CHECK(r.total_degree() == 2);
}

TEST_CASE("eval and derivative") {
  Poly x = Poly::variable(0), y = Poly::variable(1);
  Poly p = x * x * y + Poly::constant(Rat(3)) * y + Poly::constant(Rat(5));
  std::vector<Rat> pt = {Rat(2), Rat(7)};
  CHECK(p.eval(pt) == Rat(4 * 7 + 21 + 5));
  CHECK(p.derivative_at(0, pt) == Rat(2 * 2 * 7));
  CHECK(p.derivative_at(1, pt) == Rat(4 + 3));
}

TEST_CASE("split_affine") {
  Poly x = Poly::variable(0), y = Poly::variable(1);
  Poly p = (y + Poly::constant(Rat(2))) * x + y * y;
  auto [a, b] = p.split_affine(0);
  CHECK(a == y + Poly::constant(Rat(2)));
  CHECK(b == y * y);
  CHECK_THROWS_AS((x * x).split_affine(0), std::logic_error);
}

TEST_CASE("substitution keeps unset variables symbolic") {
  Poly x = Poly::variable(0), y = Poly::variable(1);
  Poly p = x * y + x;
  std::vector<bool> known = {false, true};
  std::vector<Rat> values = {Rat(0), Rat(4)};
  Poly s = p.substitute(known, values);
  CHECK(s == Poly::constant(Rat(5)) * x);
}

TEST_CASE("deterministic printing") {
  Poly x = Poly::variable(0), y = Poly::variable(1);
  Poly p = x * x - Poly::constant(Rat(2)) * y + Poly::constant(Rat(1));
  CHECK(p.to_string(plain_name) == "1 + x0^2 - 2*x1");
}
