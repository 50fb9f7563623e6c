#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wminus/lie.hpp"

namespace wminus {

// PBW generator: the central C, the central w_{0,0} (= b[0,0]), or a basis
// element b_{j,l} with j + l odd.
struct EnvGen {
  enum Kind : int8_t { C = 0, W00 = 1, B = 2 };
  int8_t kind{B};
  int64_t j{};
  int64_t l{};

  friend bool operator==(const EnvGen& x, const EnvGen& y) {
    return x.kind == y.kind && x.j == y.j && x.l == y.l;
  }
  // Container key order (not the PBW order).
  friend bool operator<(const EnvGen& x, const EnvGen& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.j != y.j) return x.j < y.j;
    return x.l < y.l;
  }
};

// Straightening order: C, then w_{0,0}, then b_{j,l} with high t-degree first
// (annihilation side leftmost) and dot degree ascending within a t-degree.
bool pbw_less(const EnvGen& x, const EnvGen& y);

using Word = std::vector<EnvGen>;  // canonical form: weakly increasing in pbw_less

struct EnvElement {
  std::map<Word, Scalar> terms;  // empty word = scalar unit

  bool is_zero() const { return terms.empty(); }
  void add_word(const Word& w, const Scalar& s);
  void add(const EnvElement& o, const Scalar& scale = Scalar(1));

  friend EnvElement operator+(EnvElement x, const EnvElement& y) { x.add(y); return x; }
  friend EnvElement operator-(EnvElement x, const EnvElement& y) { x.add(y, Scalar(-1)); return x; }
  friend EnvElement operator*(const Scalar& s, EnvElement x);
  friend bool operator==(const EnvElement& x, const EnvElement& y) { return x.terms == y.terms; }
};

EnvElement env_scalar(Scalar s);
EnvElement env_gen(int64_t j, int64_t l, Scalar coeff = Scalar(1));  // b_{j,l} or b[0,0]
EnvElement env_central(Scalar coeff = Scalar(1));
EnvElement env_from_bdecomp(const BDecomp& d);
// Lift of a Lie element lying in the spanning family; throws if outside it.
EnvElement env_from_lie(const LieElement& x);

// Straighten every word into weakly increasing PBW order, rewriting each
// adjacent inversion x y -> y x + [x, y] with the bracket re-expanded over
// {b_{j,l}, w_{0,0}, C}.  Terminates by (length, inversion count) descent.
EnvElement pbw_normal_form(const EnvElement& a);

EnvElement multiply(const EnvElement& a, const EnvElement& b);  // normalized product

// Quotient by the two-sided ideal <w_{0,0}, C - 1>: C factors become 1, words
// containing w_{0,0} are dropped.  Idempotent on normal forms.
EnvElement quotient_reduce(const EnvElement& a);

// multiply(a,b) - multiply(b,a), reduced.
EnvElement env_bracket(const EnvElement& a, const EnvElement& b);

// Total dot degree (sum of l over b-factors) of the highest-degree words.
int64_t dot_degree(const Word& w);
EnvElement leading_dot_part(const EnvElement& a);

// Canonical text form: longest words first, PBW-lexicographic within a
// length, factors joined with '*': "1*b[1,0]*b[-1,0] + -1*C".  The empty word
// renders as the bare scalar.
std::string render(const EnvElement& a);

}  // namespace wminus
