#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wminus/env.hpp"

namespace wminus {

// Atom of the presented trace algebra: one of the four generators, or a named
// ledger element (resolved at expansion time; unknown names make an
// expression inexpressible rather than ill-formed).
struct TraceAtom {
  enum Kind : int8_t { Hm1 = 0, H2X = 1, Hm2X = 2, D02 = 3, Named = 4 };
  int8_t kind{Named};
  std::string name;  // set iff kind == Named

  friend bool operator==(const TraceAtom& x, const TraceAtom& y) {
    return x.kind == y.kind && x.name == y.name;
  }
  friend bool operator<(const TraceAtom& x, const TraceAtom& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.name < y.name;
  }
};

std::string atom_name(const TraceAtom& a);

using TWord = std::vector<TraceAtom>;

// Element of the free associative algebra on trace atoms.
struct TraceExpr {
  std::map<TWord, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  void add_word(const TWord& w, const Scalar& s);
  void add(const TraceExpr& o, const Scalar& scale = Scalar(1));

  friend TraceExpr operator+(TraceExpr x, const TraceExpr& y) { x.add(y); return x; }
  friend TraceExpr operator-(TraceExpr x, const TraceExpr& y) { x.add(y, Scalar(-1)); return x; }
  friend TraceExpr operator*(const Scalar& s, TraceExpr x);
  friend bool operator==(const TraceExpr& x, const TraceExpr& y) { return x.terms == y.terms; }
};

TraceExpr trace_unit(Scalar s = Scalar(1));
TraceExpr trace_atom(TraceAtom a, Scalar coeff = Scalar(1));
TraceExpr trace_gen(TraceAtom::Kind k, Scalar coeff = Scalar(1));
TraceExpr trace_name(const std::string& name, Scalar coeff = Scalar(1));
TraceExpr trace_mul(const TraceExpr& a, const TraceExpr& b);
TraceExpr trace_comm(const TraceExpr& a, const TraceExpr& b);  // ab - ba

std::string render(const TraceExpr& x);

// Definition ledger: names introduced in dependency order, each definition an
// expression over generators and earlier names only.
struct LedgerEntry {
  std::string name;
  TraceExpr def;
  std::string anchor;  // one-line rationale for the definition
};

class Ledger {
 public:
  void add(std::string name, TraceExpr def, std::string anchor);
  bool has(const std::string& name) const { return index_.count(name) > 0; }
  const std::vector<LedgerEntry>& entries() const { return entries_; }
  const LedgerEntry& entry(const std::string& name) const;

  // Rewrite over generators only.  Names absent from the ledger are collected
  // in `missing` (deduplicated) and kept as opaque atoms.
  TraceExpr expand(const TraceExpr& x, std::vector<std::string>* missing = nullptr) const;

 private:
  std::vector<LedgerEntry> entries_;
  std::map<std::string, size_t> index_;
  mutable std::map<std::string, TraceExpr> cache_;
};

// The shipped ledger: odd cycle generators h[n], bubbles d0/d2/dbar0/dbar2/
// dbar4, and the dotted one-cycle corrections h1x2 / h-1x2.
const Ledger& shipped_ledger();

// Images of the four generators: scalar multiples of single basis elements,
//   H[-1] -> a1 b[1,0],  H2X -> a2 b[-2,1],  H-2X -> a3 b[2,1],  D02 -> a4 b[0,3].
struct PhiAssignment {
  Scalar a1, a2, a3, a4;
};
PhiAssignment calibrated_assignment();

struct MissingNames {
  std::vector<std::string> names;
};

// Multiplicative extension of the generator assignment, normalized and
// reduced.  Throws MissingNames when the expression uses undefined names.
EnvElement phi_image(const TraceExpr& x, const Ledger& ledger, const PhiAssignment& as);

enum class Status { MATCH, MISMATCH, NOT_EXPRESSIBLE, EXPECTED_MISMATCH };
std::string status_name(Status s);

struct CheckOutcome {
  Status status{Status::MATCH};
  EnvElement difference;  // phi(lhs) - phi(rhs), or the leading parts' difference
  std::string note;
};

// mode "pbw": compare images in the quotient envelope.  mode "fock": compare
// the images' action on every partition of size <= fock_bound.  compare
// "leading" restricts both sides to their top dot-degree components first.
CheckOutcome check_env_images(EnvElement lhs, EnvElement rhs, const std::string& mode,
                              const std::string& compare, int64_t fock_bound);
CheckOutcome check_relation(const TraceExpr& lhs, const TraceExpr& rhs, const std::string& mode,
                            const std::string& compare, int64_t fock_bound, const Ledger& ledger,
                            const PhiAssignment& as);

struct CalibrationStep {
  std::string parameter;  // "a1".."a4"
  std::string instance;   // relation used, or "gauge"
  Scalar value;
  bool solved;  // false: pinned/gauge, unconstrained by the core set
  std::string note;
};

struct CalibrationReport {
  PhiAssignment assignment;
  std::vector<CalibrationStep> steps;
  std::vector<std::pair<std::string, Status>> core_checks;
  std::vector<std::string> variant_notes;
  bool consistent{false};
};

// Gauge-fix a1 = sqrt2, solve a2 and a3 from the odd pairing relations, probe
// a4 against the core set (unconstrained; pinned by the stated assignment),
// then re-verify the whole core relation set.
CalibrationReport calibrate_phi();

}  // namespace wminus
