#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wminus/env.hpp"
#include "wminus/fock.hpp"
#include "wminus/heis.hpp"
#include "wminus/lie.hpp"
#include "wminus/trace.hpp"

namespace wminus {

// Reported with the 0-based input position of the offending token.
struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(size_t p, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Shared expression grammar over each element type:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ['-'] (rational | 's2' | atom | '(' expr ')' | '[' ... ']')
// '[' opens a commutator in trace expressions and a partition in Fock ones.
// Every rendered element re-parses to an equal value.
Scalar parse_scalar(std::string_view src);
LieElement parse_lie(std::string_view src);       // atoms w[k,l], b[j,l], C; no products
EnvElement parse_env(std::string_view src);       // atoms b[j,l], C, w[k,l] (converted); products
FockVector parse_fock(std::string_view src);      // atoms [p1,p2,...]; no products
HeisElement parse_heis(std::string_view src);     // atoms h[n/2], n odd; no products
TraceExpr parse_trace(std::string_view src);      // generator/ledger atoms, products, commutators
Partition parse_partition_literal(std::string_view src);

}  // namespace wminus
