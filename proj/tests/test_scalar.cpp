#include "doctest.h"
#include "wminus/parse.hpp"
#include "wminus/scalar.hpp"

using namespace wminus;

TEST_CASE("field arithmetic in Q(sqrt2)") {
  Scalar x(Rat(3, 2), Rat(-1));  // 3/2 - s2
  Scalar y(Rat(1), Rat(2));      // 1 + 2 s2

  CHECK(x + y == Scalar(Rat(5, 2), Rat(1)));
  CHECK(x - y == Scalar(Rat(1, 2), Rat(-3)));
  // (3/2 - s2)(1 + 2 s2) = 3/2 + 3 s2 - s2 - 4 = -5/2 + 2 s2
  CHECK(x * y == Scalar(Rat(-5, 2), Rat(2)));
  CHECK(-x == Scalar(Rat(-3, 2), Rat(1)));
  CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
}

TEST_CASE("inverse divides out exactly") {
  Scalar x(Rat(3, 2), Rat(-1));
  CHECK(x * x.inverse() == Scalar(1));
  CHECK(Scalar::sqrt2().inverse() == Scalar(Rat(0), Rat(1, 2)));
  // norm a^2 - 2 b^2 stays nonzero off 0: 1 + s2 inverts to -1 + s2.
  CHECK(Scalar(Rat(1), Rat(1)).inverse() == Scalar(Rat(-1), Rat(1)));
  CHECK(Scalar(Rat(7)).inverse() == Scalar(Rat(1, 7)));
}

TEST_CASE("zero and rationality predicates") {
  CHECK(Scalar().is_zero());
  CHECK(Scalar(Rat(0), Rat(0)).is_zero());
  CHECK_FALSE(Scalar::sqrt2().is_zero());
  CHECK(Scalar(Rat(5, 3)).is_rational());
  CHECK_FALSE(Scalar(Rat(5, 3), Rat(1)).is_rational());
}

TEST_CASE("canonical text forms") {
  CHECK(render(Scalar(0)) == "0");
  CHECK(render(Scalar(Rat(3, 2))) == "3/2");
  CHECK(render(Scalar(Rat(0), Rat(-1))) == "-1*s2");
  CHECK(render(Scalar(Rat(3, 2), Rat(-1))) == "3/2 + -1*s2");
  CHECK(render_coeff(Scalar(Rat(3, 2), Rat(-1))) == "(3/2 + -1*s2)");
  CHECK(render_coeff(Scalar(Rat(3, 2))) == "3/2");
}

TEST_CASE("rendered scalars re-parse to equal values") {
  for (const Scalar& s : {Scalar(0), Scalar(Rat(-7, 3)), Scalar(Rat(0), Rat(5, 2)),
                          Scalar(Rat(1, 6), Rat(-4, 9))}) {
    CHECK(parse_scalar(render(s)) == s);
  }
  CHECK(parse_scalar("2*s2*s2") == Scalar(4));
  CHECK(parse_scalar("1/2 - 3/2") == Scalar(-1));
}
