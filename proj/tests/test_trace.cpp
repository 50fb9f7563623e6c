#include "doctest.h"
#include "wminus/parse.hpp"
#include "wminus/trace.hpp"

using namespace wminus;

TEST_CASE("free algebra on atoms") {
  TraceExpr a = trace_gen(TraceAtom::H2X);
  TraceExpr b = trace_name("d0");
  CHECK(trace_mul(a, b) + trace_mul(b, a) == trace_mul(a, b) + trace_mul(b, a));
  CHECK(trace_comm(a, b) == trace_mul(a, b) - trace_mul(b, a));
  CHECK(trace_comm(a, a).is_zero());
  CHECK(atom_name(TraceAtom{TraceAtom::Hm1, ""}) == "H[-1]");
  CHECK(atom_name(TraceAtom{TraceAtom::Named, "h[3]"}) == "h[3]");
}

TEST_CASE("shipped ledger: names, order, expansion") {
  const Ledger& lg = shipped_ledger();
  for (const char* name : {"h[-1]", "h[1]", "h[3]", "h[5]", "h[-3]", "h[-5]", "dbar0", "d0",
                           "d2", "dbar2", "dbar4", "h1x2", "h-1x2"}) {
    CHECK(lg.has(name));
  }
  CHECK(lg.entries().size() == 13);
  CHECK_FALSE(lg.has("d1"));
  CHECK_FALSE(lg.has("d4"));

  // The alias expands to the bare generator.
  CHECK(lg.expand(trace_name("h[-1]")) == trace_gen(TraceAtom::Hm1));
  // Expansion eliminates every named atom.
  TraceExpr flat = lg.expand(parse_trace("dbar4 + h1x2*d2"));
  for (const auto& [w, s] : flat.terms)
    for (const auto& atom : w) CHECK(atom.kind != TraceAtom::Named);
  // Unknown names are collected, not fatal.
  std::vector<std::string> missing;
  lg.expand(parse_trace("d4*dbar0 + d6"), &missing);
  CHECK(missing == std::vector<std::string>{"d4", "d6"});
}

TEST_CASE("generator images are scaled single basis elements") {
  PhiAssignment as = calibrated_assignment();
  CHECK(as.a1 == Scalar::sqrt2());
  CHECK(as.a2 == Scalar(-4));
  CHECK(as.a3 == Scalar(-4));
  CHECK(as.a4 == Scalar(-2));
  const Ledger& lg = shipped_ledger();
  CHECK(phi_image(trace_gen(TraceAtom::Hm1), lg, as) == parse_env("s2*b[1,0]"));
  CHECK(phi_image(trace_gen(TraceAtom::H2X), lg, as) == parse_env("-4*b[-2,1]"));
  CHECK(phi_image(trace_gen(TraceAtom::D02), lg, as) == parse_env("-2*b[0,3]"));
}

TEST_CASE("images of ledger names, frozen") {
  const Ledger& lg = shipped_ledger();
  PhiAssignment as = calibrated_assignment();
  CHECK(phi_image(parse_trace("h[1]"), lg, as) == parse_env("s2*b[-1,0]"));
  CHECK(phi_image(parse_trace("h[-3]"), lg, as) == parse_env("s2*b[3,0]"));
  CHECK(phi_image(parse_trace("dbar0"), lg, as) == parse_env("1"));
  CHECK(phi_image(parse_trace("d0"), lg, as) == parse_env("-2*b[0,1]"));
  CHECK_THROWS_AS(phi_image(parse_trace("d4"), lg, as), MissingNames);
}

TEST_CASE("check_relation statuses") {
  const Ledger& lg = shipped_ledger();
  PhiAssignment as = calibrated_assignment();
  auto check = [&](const char* l, const char* r, const char* mode) {
    return check_relation(parse_trace(l), parse_trace(r), mode, "exact", 6, lg, as);
  };
  CHECK(check("[h[1], h[-1]]", "-2*dbar0", "pbw").status == Status::MATCH);
  CHECK(check("[h[1], h[-1]]", "-2*dbar0", "fock").status == Status::MATCH);
  CHECK(check("[H2X, h[-3]]", "0", "pbw").status == Status::MISMATCH);
  CHECK(check("[H2X, h[-3]]", "0", "fock").status == Status::MISMATCH);
  CHECK(check("d1", "0", "pbw").status == Status::NOT_EXPRESSIBLE);
  CHECK_FALSE(check("[H2X, h[-3]]", "0", "pbw").difference.is_zero());
}

TEST_CASE("leading comparison restricts to the top dot degree") {
  const Ledger& lg = shipped_ledger();
  PhiAssignment as = calibrated_assignment();
  // The two-dot one-cycle image has lower-order tails; leading ignores them.
  EnvElement lhs = phi_image(parse_trace("h1x2"), lg, as);
  EnvElement rhs = quotient_reduce(env_from_lie(parse_lie("s2*(w[-1,2] - w[-1,1])")));
  CHECK(check_env_images(lhs, rhs, "pbw", "leading", 6).status == Status::MATCH);
  CHECK(check_env_images(lhs, rhs, "pbw", "exact", 6).status == Status::MISMATCH);
  CHECK(check_env_images(lhs, rhs, "fock", "leading", 6).status == Status::MATCH);
}

TEST_CASE("calibration is reproducible and internally consistent") {
  CalibrationReport rep = calibrate_phi();
  CHECK(rep.consistent);
  CHECK(rep.assignment.a1 == calibrated_assignment().a1);
  CHECK(rep.assignment.a2 == calibrated_assignment().a2);
  CHECK(rep.assignment.a3 == calibrated_assignment().a3);
  CHECK(rep.assignment.a4 == calibrated_assignment().a4);
  REQUIRE(rep.steps.size() == 4);
  CHECK(rep.steps[0].parameter == "a1");
  CHECK_FALSE(rep.steps[0].solved);  // gauge
  CHECK(rep.steps[3].parameter == "a4");
  CHECK_FALSE(rep.steps[3].solved);  // pinned, unconstrained by the core set
  for (const auto& [id, st] : rep.core_checks) CHECK(st == Status::MATCH);
  CHECK(rep.variant_notes.size() == 3);
}

TEST_CASE("fock mode catches differences the vacuum hides") {
  const Ledger& lg = shipped_ledger();
  PhiAssignment as = calibrated_assignment();
  // The full two-dot image relation fails off the vacuum: the tail kills the
  // vacuum but not |1>.
  EnvElement lhs = phi_image(parse_trace("h1x2"), lg, as);
  EnvElement rhs = quotient_reduce(env_from_lie(parse_lie("s2*(w[-1,2] - w[-1,1])")));
  auto out = check_env_images(lhs, rhs, "fock", "exact", 6);
  CHECK(out.status == Status::MISMATCH);
  CHECK(out.note.find("[1]") != std::string::npos);
}
