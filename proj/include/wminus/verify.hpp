#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wminus/trace.hpp"

namespace wminus {

// Knobs for the relation suites.  Defaults are the shipped bounds; every
// sampled check derives its stream from `seed` and the check id, so equal
// options give byte-identical reports.
struct VerifyOptions {
  uint64_t seed = 20240801;
  int lie_samples = 500;   // random bracket triples per structure law
  int64_t max_tdeg = 6;    // |t-degree| cap for sampled elements
  int64_t max_dot = 5;     // dot-degree cap for sampled elements
  int pbw_samples = 200;   // random triples in the envelope
  int64_t fock_bound = 8;  // act on all partitions of size <= bound
  int64_t heis_bound = 11; // odd numerator cap for the half-integer modes
  int64_t dims_rank = 6;   // graded dimension grid, rank axis
  int64_t dims_weight = 12;// graded dimension grid, weight axis
  std::string manifest;    // override table text; empty = embedded table
};

struct RelationReport {
  std::string suite;
  std::string id;
  std::string status;  // OK, FAIL, MATCH, MISMATCH, EXPECTED-MISMATCH, NOT-EXPRESSIBLE
  bool unexpected = false;
  std::string note;
};

struct VerifyResult {
  std::vector<RelationReport> reports;
  int unexpected = 0;
};

// suite: one of lie, pbw, fock, heis, gen, dims, phi, all.  Throws
// std::invalid_argument for unknown suite names and std::runtime_error for a
// malformed manifest override.
VerifyResult run_suite(const std::string& suite, const VerifyOptions& opt);

// The relation table baked in from share/phi_manifest.wm.
const char* embedded_manifest();

// One row of the relation table.
struct ManifestRow {
  std::string id;
  std::string mode;     // pbw, fock, both
  std::string compare;  // exact, leading
  std::string expect;   // MATCH, MISMATCH, NOT-EXPRESSIBLE
  int64_t bound = 0;    // fock partition cap; 0 = use the option default
  std::string lhs;
  std::string rhs;      // may carry a 'lie:' prefix
  std::string note;
};

std::vector<ManifestRow> parse_manifest(const std::string& text);

// Human table / machine key-value renderings.  Neither includes timing, so
// repeated runs with equal options are byte-identical.
void render_text(std::ostream& os, const VerifyResult& res);
void render_machine(std::ostream& os, const VerifyResult& res);

}  // namespace wminus
