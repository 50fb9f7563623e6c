#include "doctest.h"
#include "wminus/parse.hpp"

using namespace wminus;

TEST_CASE("expression grammar: precedence, unary minus, parentheses") {
  CHECK(parse_lie("2*w[1,0] - w[0,1]") == parse_lie("-1*w[0,1] + 2*w[1,0]"));
  CHECK(parse_lie("-(w[1,0] - w[0,1])") == parse_lie("w[0,1] - w[1,0]"));
  CHECK(parse_scalar("1/2*(3 - 1)") == Scalar(1));
  CHECK(parse_scalar("-s2*-s2") == Scalar(2));
  CHECK(parse_env("b[1,0]*(b[-1,0] + C)") ==
        parse_env("b[1,0]*b[-1,0] + b[1,0]*C"));
}

TEST_CASE("whitespace is insignificant") {
  CHECK(parse_lie(" w[ 1 , 0 ]  +  2 * C ") == parse_lie("w[1,0] + 2*C"));
  CHECK(parse_fock("[ 2 , 1 ]") == parse_fock("[2,1]"));
}

TEST_CASE("error positions are 0-based input offsets") {
  try {
    parse_lie("w[1,2)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos == 5);
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
  try {
    parse_lie("w[1,2] + q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos == 9);
  }
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_lie("w[1,2] w[0,1]"), ParseError);  // lie has no products
  CHECK_THROWS_AS(parse_fock("[2,1"), ParseError);
  CHECK_THROWS_AS(parse_heis("h[2/2]"), ParseError);
  CHECK_THROWS_AS(parse_heis("h[1/3]"), ParseError);
}

TEST_CASE("lie atoms: w, b, C") {
  CHECK(parse_lie("b[2,1]") == parse_lie("w[2,1] + w[2,0]"));
  CHECK(parse_lie("C").cC == Scalar(1));
  CHECK_THROWS_AS(parse_lie("b[2,2]"), ParseError);  // j + l must be odd
}

TEST_CASE("env atoms convert w into the spanning family one atom at a time") {
  CHECK(parse_env("w[1,0]") == parse_env("b[1,0]"));
  CHECK(parse_env("w[0,3] + 3/4*w[0,1]") == parse_env("b[0,3] + 3/4*b[0,1]"));
  // A lone w outside the family is rejected at its own position; sums that
  // would land inside it are not re-assembled.
  CHECK_THROWS_AS(parse_env("w[2,1]"), ParseError);
  CHECK_THROWS_AS(parse_env("w[2,1] + w[2,0]"), ParseError);
}

TEST_CASE("a bare zero parses as the zero element everywhere") {
  CHECK(parse_lie("0").is_zero());
  CHECK(parse_fock("0").is_zero());
  CHECK(parse_heis("0").is_zero());
  CHECK(parse_env("0").is_zero());
  CHECK_THROWS_AS(parse_lie("2"), ParseError);
  CHECK_THROWS_AS(parse_fock("1/2"), ParseError);
}

TEST_CASE("partition literals") {
  CHECK(parse_partition_literal("[3,1,1]") == Partition{3, 1, 1});
  CHECK(parse_partition_literal("[]") == Partition{});
  CHECK_THROWS_AS(parse_partition_literal("[1,3]"), ParseError);  // must be weakly decreasing
  CHECK_THROWS_AS(parse_partition_literal("[0]"), ParseError);
}

TEST_CASE("trace expressions: generators, names, commutators, products") {
  TraceExpr t = parse_trace("[H2X, H[-1]]");
  CHECK(t == trace_comm(trace_gen(TraceAtom::H2X), trace_gen(TraceAtom::Hm1)));
  CHECK(parse_trace("h[3]") == trace_name("h[3]"));
  CHECK(parse_trace("dbar0*d2 + dbar2*d0") ==
        trace_mul(trace_name("dbar0"), trace_name("d2")) +
            trace_mul(trace_name("dbar2"), trace_name("d0")));
  CHECK(parse_trace("-1/4*[H2X, H[-1]]") ==
        Scalar(Rat(-1, 4)) * trace_comm(trace_gen(TraceAtom::H2X), trace_gen(TraceAtom::Hm1)));
  CHECK(parse_trace("2") == trace_unit(Scalar(2)));
}

TEST_CASE("rendered trace expressions re-parse") {
  for (const char* src :
       {"[H2X, [H-2X, H[-1]]]", "h1x2*dbar0 - 2*D02", "1/2*s2*h[5] + d0*d0"}) {
    TraceExpr t = parse_trace(src);
    CHECK(parse_trace(render(t)) == t);
  }
}
