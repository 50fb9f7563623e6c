#include "doctest.h"
#include "wminus/lie.hpp"
#include "wminus/parse.hpp"

using namespace wminus;

TEST_CASE("DPoly shift and reflection") {
  DPoly f = DPoly::monomial(2);  // D^2
  CHECK(f.shifted(Rat(1)) == parse_lie("w[0,2] + 2*w[0,1] + w[0,0]").components().at(0));
  CHECK(f.reflected_shift(Rat(-3)) == parse_lie("w[0,2] + 6*w[0,1] + 9*w[0,0]").components().at(0));
  CHECK(f.eval(Rat(-5, 2)) == Scalar(Rat(25, 4)));
  CHECK(DPoly().degree() == -1);
}

TEST_CASE("bracket reproduces hand-expanded commutators") {
  // [t D, t^-1] = t^0 ((D-1) - D) + psi(1, D, -1, 1) C = -1 - C.
  CHECK(bracket(parse_lie("w[1,1]"), parse_lie("w[-1,0]")) == parse_lie("-1*w[0,0] - C"));
  // [t, t^-1] = psi(1,1,-1,1) C = C.
  CHECK(bracket(lie_w(1, 0), lie_w(-1, 0)) == parse_lie("C"));
  // [t^2 D, t^-2 D] = -4 D - C.
  CHECK(bracket(lie_w(2, 1), lie_w(-2, 1)) == parse_lie("-4*w[0,1] - C"));
  // The central summand drops out of every bracket.
  CHECK(bracket(parse_lie("5*C"), parse_lie("w[-2,3] + w[0,1]")).is_zero());
  CHECK(bracket(parse_lie("w[1,1] + 5*C"), lie_w(0, 1)) == bracket(lie_w(1, 1), lie_w(0, 1)));
  CHECK(bracket(lie_w(1, 1), lie_w(0, 1)) == parse_lie("-1*w[1,1]"));
  // No t-degree cancellation, no central term: [t^2, t D] = t^3 (D - (D+2)).
  CHECK(bracket(lie_w(2, 0), lie_w(1, 1)) == parse_lie("-2*w[3,0]"));
}

TEST_CASE("cocycle window") {
  DPoly one = DPoly::monomial(0), d = DPoly::monomial(1), d2 = DPoly::monomial(2);
  CHECK(cocycle_psi(1, one, -1, one) == Scalar(1));
  CHECK(cocycle_psi(1, d, -1, d) == Scalar(0));       // f(-1) g(0) = 0
  CHECK(cocycle_psi(2, d, -2, d) == Scalar(-1));      // f(-2)g(0) + f(-1)g(1)
  CHECK(cocycle_psi(3, d2, -3, one) == Scalar(14));   // 9 + 4 + 1
  CHECK(cocycle_psi(-3, one, 3, d2) == Scalar(-14));  // antisymmetric extension
  CHECK(cocycle_psi(2, d, -1, d) == Scalar(0));       // degrees do not cancel
}

TEST_CASE("sigma on monomials and the decreed pair") {
  CHECK(sigma_apply(lie_w(3, 2)) == parse_lie("-1*w[3,2] - 6*w[3,1] - 9*w[3,0]"));
  CHECK(sigma_apply(lie_w(0, 1)) == parse_lie("-1*w[0,1]"));
  CHECK(sigma_apply(lie_w(0, 0)) == parse_lie("-1*w[0,0]"));  // decree, not the formula
  CHECK(sigma_apply(lie_central()) == parse_lie("-1*C"));
  LieElement x = parse_lie("2*w[-3,4] + w[2,1] - 7*C");
  CHECK(sigma_apply(sigma_apply(x)) == x);
}

TEST_CASE("membership needs the matched parity tail") {
  CHECK_FALSE(is_in_wminus(parse_lie("w[2,1]")));
  CHECK(is_in_wminus(parse_lie("w[2,1] + w[2,0]")));
  CHECK_FALSE(is_in_wminus(parse_lie("w[2,1] - w[2,0]")));
  CHECK(is_in_wminus(parse_lie("w[1,0]")));
  CHECK(is_in_wminus(parse_lie("w[0,0] + 3*C")));
  CHECK_FALSE(is_in_wminus(parse_lie("w[0,2]")));
  CHECK(is_in_wminus(parse_lie("w[0,3] + 3/4*w[0,1]")));  // (D)^3 shifted by 0: odd dots only
}

TEST_CASE("basis elements expand as shifted powers") {
  CHECK(wminus_basis_element(2, 1) == parse_lie("w[2,1] + w[2,0]"));
  CHECK(wminus_basis_element(-3, 2) == parse_lie("w[-3,2] - 3*w[-3,1] + 9/4*w[-3,0]"));
  CHECK(wminus_basis_element(0, 0) == parse_lie("w[0,0]"));
  CHECK(wminus_basis_element(1, 0) == parse_lie("w[1,0]"));
  CHECK(is_in_wminus(wminus_basis_element(4, 3)));
  CHECK(is_in_wminus(wminus_basis_element(-5, 2)));
}

TEST_CASE("b-basis decomposition round-trips and rejects outsiders") {
  LieElement x = parse_lie("b[2,1] - 3*b[-1,2] + 2*w[0,0] + 5*C");
  auto d = to_bbasis(x);
  REQUIRE(d.has_value());
  CHECK(d->b.at({2, 1}) == Scalar(1));
  CHECK(d->b.at({-1, 2}) == Scalar(-3));
  CHECK(d->c00 == Scalar(2));
  CHECK(d->cC == Scalar(5));
  LieElement back = d->cC * lie_central() + d->c00 * lie_w(0, 0);
  for (const auto& [jl, c] : d->b) back = back + c * wminus_basis_element(jl.first, jl.second);
  CHECK(back == x);
  CHECK_FALSE(to_bbasis(parse_lie("w[2,1]")).has_value());
}

TEST_CASE("render order: (k,l) descending, central last") {
  CHECK(render(bracket(lie_w(1, 0), lie_w(0, 3))) == "-3*w[1,2] + -3*w[1,1] + -1*w[1,0]");
  CHECK(render(parse_lie("C + w[-1,0] + w[1,0]")) == "1*w[1,0] + 1*w[-1,0] + 1*C");
  CHECK(render(LieElement{}) == "0");
}

TEST_CASE("rendered lie elements re-parse to equal values") {
  for (const char* src : {"w[1,0]", "-3*w[1,2] + -1*w[1,0] + 2*C", "1/2*s2*w[-3,1]", "0"}) {
    LieElement x = parse_lie(src);
    CHECK(parse_lie(render(x)) == x);
  }
}
