#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "wminus/lie.hpp"

namespace wminus {

// Twisted Heisenberg algebra: generators h_{n/2} indexed by odd integers n,
// [h_a, h_b] = a delta_{a,-b} K with K central.  Elements are stored by odd
// numerator.
struct HeisElement {
  std::map<int64_t, Scalar> terms;  // odd numerator n -> coeff of h_{n/2}
  Scalar cK{};

  bool is_zero() const { return terms.empty() && cK.is_zero(); }
  void add_term(int64_t n, const Scalar& s);

  friend bool operator==(const HeisElement& x, const HeisElement& y) {
    return x.terms == y.terms && x.cK == y.cK;
  }
};

HeisElement heis_h(int64_t odd_numerator, Scalar coeff = Scalar(1));

HeisElement heis_bracket(const HeisElement& x, const HeisElement& y);

// h_{n/2} -> (1/sqrt2) t^n, K -> C; intertwines the brackets exactly.
LieElement heis_embed(const HeisElement& x);

std::string render(const HeisElement& x);

}  // namespace wminus
