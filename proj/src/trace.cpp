#include "wminus/trace.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "wminus/fock.hpp"
#include "wminus/parse.hpp"

namespace wminus {

std::string atom_name(const TraceAtom& a) {
  switch (a.kind) {
    case TraceAtom::Hm1:
      return "H[-1]";
    case TraceAtom::H2X:
      return "H2X";
    case TraceAtom::Hm2X:
      return "H-2X";
    case TraceAtom::D02:
      return "D02";
    default:
      return a.name;
  }
}

void TraceExpr::add_word(const TWord& w, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, s);
    return;
  }
  it->second += s;
  if (it->second.is_zero()) terms.erase(it);
}

void TraceExpr::add(const TraceExpr& o, const Scalar& scale) {
  for (const auto& [w, s] : o.terms) add_word(w, s * scale);
}

TraceExpr operator*(const Scalar& s, TraceExpr x) {
  TraceExpr out;
  for (const auto& [w, v] : x.terms) out.add_word(w, s * v);
  return out;
}

TraceExpr trace_unit(Scalar s) {
  TraceExpr x;
  x.add_word({}, s);
  return x;
}

TraceExpr trace_atom(TraceAtom a, Scalar coeff) {
  TraceExpr x;
  x.add_word({std::move(a)}, coeff);
  return x;
}

TraceExpr trace_gen(TraceAtom::Kind k, Scalar coeff) {
  return trace_atom(TraceAtom{static_cast<int8_t>(k), {}}, std::move(coeff));
}

TraceExpr trace_name(const std::string& name, Scalar coeff) {
  return trace_atom(TraceAtom{TraceAtom::Named, name}, std::move(coeff));
}

TraceExpr trace_mul(const TraceExpr& a, const TraceExpr& b) {
  TraceExpr out;
  for (const auto& [wa, va] : a.terms)
    for (const auto& [wb, vb] : b.terms) {
      TWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_word(w, va * vb);
    }
  return out;
}

TraceExpr trace_comm(const TraceExpr& a, const TraceExpr& b) {
  return trace_mul(a, b) - trace_mul(b, a);
}

std::string render(const TraceExpr& x) {
  if (x.terms.empty()) return "0";
  std::vector<const std::pair<const TWord, Scalar>*> order;
  order.reserve(x.terms.size());
  for (const auto& t : x.terms) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const auto* p, const auto* q) {
    if (p->first.size() != q->first.size()) return p->first.size() < q->first.size();
    return p->first < q->first;
  });
  std::string out;
  for (const auto* t : order) {
    if (!out.empty()) out += " + ";
    if (t->first.empty()) {
      out += render(t->second);
      continue;
    }
    out += render_coeff(t->second);
    for (const auto& a : t->first) {
      out += '*';
      out += atom_name(a);
    }
  }
  return out;
}

void Ledger::add(std::string name, TraceExpr def, std::string anchor) {
  if (index_.count(name)) throw std::logic_error("ledger name defined twice: " + name);
  for (const auto& [w, s] : def.terms)
    for (const auto& a : w)
      if (a.kind == TraceAtom::Named && !index_.count(a.name))
        throw std::logic_error("ledger definition of " + name + " uses undefined name " + a.name);
  index_.emplace(name, entries_.size());
  entries_.push_back(LedgerEntry{std::move(name), std::move(def), std::move(anchor)});
}

const LedgerEntry& Ledger::entry(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("no ledger entry named " + name);
  return entries_[it->second];
}

TraceExpr Ledger::expand(const TraceExpr& x, std::vector<std::string>* missing) const {
  TraceExpr out;
  for (const auto& [w, s] : x.terms) {
    TraceExpr word = trace_unit(s);
    for (const auto& a : w) {
      if (a.kind == TraceAtom::Named && has(a.name)) {
        auto it = cache_.find(a.name);
        if (it == cache_.end())
          it = cache_.emplace(a.name, expand(entry(a.name).def, nullptr)).first;
        word = trace_mul(word, it->second);
      } else {
        if (a.kind == TraceAtom::Named && missing &&
            std::find(missing->begin(), missing->end(), a.name) == missing->end())
          missing->push_back(a.name);
        word = trace_mul(word, trace_atom(a));
      }
    }
    out.add(word);
  }
  return out;
}

const Ledger& shipped_ledger() {
  static const Ledger ledger = [] {
    Ledger lg;
    auto def = [&lg](const char* name, const char* rhs, const char* anchor) {
      lg.add(name, parse_trace(rhs), anchor);
    };
    def("h[-1]", "H[-1]", "alias: the generator is the unit down one-cycle");
    def("h[1]", "-1/4*[H2X, H[-1]]", "up ladder step at m = -1, coefficient 4m = -4");
    def("h[3]", "1/4*[H2X, h[1]]", "up ladder step at m = 1, coefficient 4m = 4");
    def("h[5]", "1/12*[H2X, h[3]]", "up ladder step at m = 3, coefficient 4m = 12");
    def("h[-3]", "-1/4*[H-2X, H[-1]]", "down ladder step at m = -1, coefficient 4m = -4");
    def("h[-5]", "-1/12*[H-2X, h[-3]]", "down ladder step at m = -3, coefficient 4m = -12");
    def("dbar0", "-1/2*[h[1], H[-1]]",
        "zero-dot pairing bubble, normalized so the unit pairing reads -2*dbar0");
    def("d0", "-1/32*[H2X, H-2X] - 1/2",
        "energy bubble from the opposite two-cycles, constant fixed on the vacuum");
    def("d2", "D02 - d0", "two-dot remainder of the dotted diagonal generator");
    def("dbar2", "dbar0*d0", "bubble recursion, first step");
    def("dbar4", "dbar0*d2 + dbar2*d0", "bubble recursion, second step");
    def("h1x2", "1/6*([d2, h[1]] + 2*h[1]*d0)",
        "two-dot up one-cycle, solved from the dotted raising relation");
    def("h-1x2", "-1/6*([d2, H[-1]] - 2*d0*H[-1])",
        "two-dot down one-cycle, mirror of the raising solution");
    return lg;
  }();
  return ledger;
}

PhiAssignment calibrated_assignment() {
  return PhiAssignment{Scalar::sqrt2(), Scalar(-4), Scalar(-4), Scalar(-2)};
}

EnvElement phi_image(const TraceExpr& x, const Ledger& ledger, const PhiAssignment& as) {
  std::vector<std::string> missing;
  TraceExpr flat = ledger.expand(x, &missing);
  if (!missing.empty()) throw MissingNames{std::move(missing)};
  auto gen_image = [&](const TraceAtom& a) -> EnvElement {
    switch (a.kind) {
      case TraceAtom::Hm1:
        return as.a1 * env_gen(1, 0);
      case TraceAtom::H2X:
        return as.a2 * env_gen(-2, 1);
      case TraceAtom::Hm2X:
        return as.a3 * env_gen(2, 1);
      case TraceAtom::D02:
        return as.a4 * env_gen(0, 3);
      default:
        throw MissingNames{{a.name}};  // unreachable after a clean expansion
    }
  };
  EnvElement out;
  for (const auto& [w, s] : flat.terms) {
    EnvElement word = env_scalar(s);
    for (const auto& a : w) word = quotient_reduce(multiply(word, gen_image(a)));
    out.add(word);
  }
  return out;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::MATCH:
      return "MATCH";
    case Status::MISMATCH:
      return "MISMATCH";
    case Status::NOT_EXPRESSIBLE:
      return "NOT-EXPRESSIBLE";
    default:
      return "EXPECTED-MISMATCH";
  }
}

namespace {

constexpr int64_t kNoDegree = std::numeric_limits<int64_t>::min();

int64_t top_dot_degree(const EnvElement& a) {
  int64_t best = kNoDegree;
  for (const auto& [w, s] : a.terms) best = std::max(best, dot_degree(w));
  return best;
}

EnvElement dot_component(const EnvElement& a, int64_t deg) {
  EnvElement out;
  for (const auto& [w, s] : a.terms)
    if (dot_degree(w) == deg) out.add_word(w, s);
  return out;
}

}  // namespace

CheckOutcome check_env_images(EnvElement L, EnvElement R, const std::string& mode,
                              const std::string& compare, int64_t fock_bound) {
  if (mode != "pbw" && mode != "fock")
    throw std::invalid_argument("mode must be 'pbw' or 'fock'");
  if (compare != "exact" && compare != "leading")
    throw std::invalid_argument("compare must be 'exact' or 'leading'");
  CheckOutcome out;
  if (compare == "leading") {
    int64_t deg = std::max(top_dot_degree(L), top_dot_degree(R));
    if (deg != kNoDegree) {
      L = dot_component(L, deg);
      R = dot_component(R, deg);
      out.note = "leading dot degree " + std::to_string(deg);
    }
  }
  out.difference = L - R;
  if (mode == "pbw") {
    out.status = out.difference.is_zero() ? Status::MATCH : Status::MISMATCH;
    return out;
  }
  out.status = Status::MATCH;
  for (const Partition& p : partitions_up_to(fock_bound)) {
    FockVector base = fock_basis(p);
    if (act_env(L, base) == act_env(R, base)) continue;
    out.status = Status::MISMATCH;
    if (!out.note.empty()) out.note += "; ";
    out.note += "first difference on " + render(p);
    break;
  }
  return out;
}

CheckOutcome check_relation(const TraceExpr& lhs, const TraceExpr& rhs, const std::string& mode,
                            const std::string& compare, int64_t fock_bound, const Ledger& ledger,
                            const PhiAssignment& as) {
  EnvElement L, R;
  try {
    L = phi_image(lhs, ledger, as);
    R = phi_image(rhs, ledger, as);
  } catch (const MissingNames& m) {
    CheckOutcome out;
    out.status = Status::NOT_EXPRESSIBLE;
    std::string names;
    for (const auto& n : m.names) names += (names.empty() ? "" : ", ") + n;
    out.note = "undefined names: " + names;
    return out;
  }
  return check_env_images(std::move(L), std::move(R), mode, compare, fock_bound);
}

namespace {

struct CoreRel {
  const char* id;
  const char* lhs;
  const char* rhs;
};

// Relations pinning the generator images: the one-cycle pairings, the first
// up-ladder steps, and the dot-zero / dot-two raising relations.
constexpr CoreRel kCoreRels[] = {
    {"pair-00", "[h[1], H[-1]]", "-2"},
    {"pair-01", "[h[1], h[-3]]", "0"},
    {"pair-10", "[h[3], H[-1]]", "0"},
    {"pair-11", "[h[3], h[-3]]", "-6"},
    {"ladder-up-def", "[H2X, H[-1]]", "-4*h[1]"},
    {"ladder-up-1", "[H2X, h[1]]", "4*h[3]"},
    {"virasoro-up-0", "[d0, h[1]]", "2*h[1]"},
    {"virasoro-up-1", "[d2, h[1]]", "6*h1x2 - 2*h[1]*d0"},
};

EnvElement core_residual(const CoreRel& r, const Ledger& lg, const PhiAssignment& as) {
  return phi_image(parse_trace(r.lhs), lg, as) - phi_image(parse_trace(r.rhs), lg, as);
}

// Solve f(v) = 0 for an affine residual.  Returns the solution, or nullopt
// when the residual does not depend on v.  Throws when f is not affine or the
// solved value fails to zero the residual.
std::optional<Scalar> solve_affine(const std::function<EnvElement(const Scalar&)>& f) {
  EnvElement r0 = f(Scalar(0));
  EnvElement slope = f(Scalar(1)) - r0;
  if (slope.is_zero()) return std::nullopt;
  EnvElement affine2 = r0 + slope + slope;
  if (!(f(Scalar(2)) == affine2)) throw std::logic_error("residual is not affine in the parameter");
  const auto& [word, rate] = *slope.terms.begin();
  Scalar constant;
  if (auto it = r0.terms.find(word); it != r0.terms.end()) constant = it->second;
  Scalar v = (Scalar(0) - constant) / rate;
  if (!f(v).is_zero()) throw std::logic_error("affine residual has no scalar root");
  return v;
}

}  // namespace

CalibrationReport calibrate_phi() {
  const Ledger& lg = shipped_ledger();
  CalibrationReport rep;
  PhiAssignment as{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};

  as.a1 = Scalar::sqrt2();
  rep.steps.push_back({"a1", "gauge", as.a1, false,
                       "overall scale of the one-cycle line; fixed so the unit pairing constant "
                       "is an integer"});

  const CoreRel& pair00 = kCoreRels[0];
  auto f2 = [&](const Scalar& v) {
    PhiAssignment t = as;
    t.a2 = v;
    return core_residual(pair00, lg, t);
  };
  if (auto v = solve_affine(f2)) {
    as.a2 = *v;
    rep.steps.push_back(
        {"a2", pair00.id, as.a2, true, "solved from the opposite unit-cycle pairing"});
  } else {
    rep.steps.push_back({"a2", pair00.id, as.a2, false, "unexpectedly unconstrained"});
  }

  const CoreRel& pair11 = kCoreRels[3];
  auto f3 = [&](const Scalar& v) {
    PhiAssignment t = as;
    t.a3 = v;
    return core_residual(pair11, lg, t);
  };
  if (auto v = solve_affine(f3)) {
    as.a3 = *v;
    rep.steps.push_back(
        {"a3", pair11.id, as.a3, true, "solved from the weighted three-cycle pairing"});
  } else {
    rep.steps.push_back({"a3", pair11.id, as.a3, false, "unexpectedly unconstrained"});
  }

  bool a4_constrained = false;
  for (const CoreRel& rel : kCoreRels) {
    auto f4 = [&](const Scalar& v) {
      PhiAssignment t = as;
      t.a4 = v;
      return core_residual(rel, lg, t);
    };
    if (auto v = solve_affine(f4)) {
      as.a4 = *v;
      rep.steps.push_back({"a4", rel.id, as.a4, true, "solved from a core residual"});
      a4_constrained = true;
      break;
    }
  }
  if (!a4_constrained) {
    as.a4 = Scalar(-2);
    rep.steps.push_back({"a4", "core-set-probe", as.a4, false,
                         "every core residual is independent of a4; pinned to the stated "
                         "dotted-diagonal scale"});
  }

  rep.consistent = true;
  for (const CoreRel& rel : kCoreRels) {
    Status st = core_residual(rel, lg, as).is_zero() ? Status::MATCH : Status::MISMATCH;
    if (st != Status::MATCH) rep.consistent = false;
    rep.core_checks.emplace_back(rel.id, st);
  }
  rep.assignment = as;

  {
    bool diff_in = is_in_wminus(lie_w(-2, 1) - lie_w(-2, 0));
    bool sum_in = is_in_wminus(lie_w(-2, 1) + lie_w(-2, 0));
    bool plain_in = is_in_wminus(lie_w(-2, 1));
    rep.variant_notes.push_back(
        std::string("down-shear line: w[-2,1] - w[-2,0] passes the fixed-line test (") +
        (diff_in ? "pass" : "FAIL") + "), while w[-2,1] alone (" + (plain_in ? "pass" : "fail") +
        ") and w[-2,1] + w[-2,0] (" + (sum_in ? "pass" : "fail") +
        ") do not; only the difference can carry the image of H2X");
  }
  {
    PhiAssignment t = as;
    t.a2 = Scalar(Rat(0), Rat(-2));
    EnvElement r = core_residual(pair00, lg, t);
    rep.variant_notes.push_back("a2 = -2*s2 leaves the unit pairing residual " + render(r) +
                                "; the pairing forces a2 = " + render(as.a2));
  }
  {
    TraceExpr dl_lhs = parse_trace("[h1x2, h[1]]");
    TraceExpr dl_rhs = parse_trace("2*H2X");
    EnvElement rimg = phi_image(dl_rhs, lg, as);
    int64_t deg = top_dot_degree(rimg);
    auto fdl = [&](const Scalar& v) {
      PhiAssignment t = as;
      t.a4 = v;
      return dot_component(phi_image(dl_lhs, lg, t) - rimg, deg);
    };
    if (auto v = solve_affine(fdl)) {
      rep.variant_notes.push_back("the leading dotted-ladder comparison would force a4 = " +
                                  render(*v) + " instead of the pinned " + render(as.a4) +
                                  "; shipped as an expected leading mismatch");
    } else {
      rep.variant_notes.push_back(
          "the leading dotted-ladder comparison does not constrain a4 either");
    }
  }
  return rep;
}

}  // namespace wminus
