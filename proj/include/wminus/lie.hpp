#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wminus/scalar.hpp"

namespace wminus {

// Polynomial in the Euler operator D, dense coefficient vector, c[i] = coeff of D^i.
struct DPoly {
  std::vector<Scalar> c;

  DPoly() = default;
  explicit DPoly(std::vector<Scalar> cs) : c(std::move(cs)) { trim(); }
  static DPoly monomial(int64_t deg, Scalar coeff = Scalar(1));

  void trim();
  bool is_zero() const { return c.empty(); }
  int64_t degree() const { return static_cast<int64_t>(c.size()) - 1; }  // -1 for zero
  Scalar coeff(int64_t i) const {
    return (i >= 0 && i < static_cast<int64_t>(c.size())) ? c[i] : Scalar(0);
  }

  Scalar eval(const Rat& x) const;           // f(x)
  DPoly shifted(const Rat& t) const;         // f(D + t)
  DPoly reflected_shift(const Rat& t) const; // f(-D + t)

  friend DPoly operator+(const DPoly& f, const DPoly& g);
  friend DPoly operator-(const DPoly& f, const DPoly& g);
  friend DPoly operator*(const DPoly& f, const DPoly& g);
  friend bool operator==(const DPoly& f, const DPoly& g) { return f.c == g.c; }
};

// Element of the centrally extended Lie algebra: a finite sum of monomials
// w_{k,l} = t^k D^l plus a multiple of the central element C.  Zero
// coefficients are never stored.
struct LieElement {
  std::map<std::pair<int64_t, int64_t>, Scalar> terms;  // (k,l) -> coeff
  Scalar cC{};

  bool is_zero() const { return terms.empty() && cC.is_zero(); }
  void add_term(int64_t k, int64_t l, const Scalar& s);
  void add(const LieElement& o, const Scalar& scale = Scalar(1));

  friend LieElement operator+(LieElement x, const LieElement& y) { x.add(y); return x; }
  friend LieElement operator-(LieElement x, const LieElement& y) { x.add(y, Scalar(-1)); return x; }
  friend LieElement operator*(const Scalar& s, LieElement x);
  friend bool operator==(const LieElement& x, const LieElement& y) {
    return x.terms == y.terms && x.cC == y.cC;
  }

  // t-homogeneous components as polynomials in D, keyed by t-degree.
  std::map<int64_t, DPoly> components() const;
};

LieElement lie_w(int64_t k, int64_t l, Scalar coeff = Scalar(1));
LieElement lie_central(Scalar coeff = Scalar(1));

// f(D + t), shift by a rational amount (used with t = +-j/2 and integer t-degrees).
DPoly shift_poly(const DPoly& f, const Rat& t);

// 2-cocycle on t^r f(D), t^s g(D): nonzero only when r + s = 0, with
//   psi = sum_{-r <= j <= -1} f(j) g(j+r)   for r >= 0,
// extended antisymmetrically to r < 0.
Scalar cocycle_psi(int64_t r, const DPoly& f, int64_t s, const DPoly& g);

// [t^r f(D), t^s g(D)] = t^{r+s} (f(D+s) g(D) - f(D) g(D+r)) + psi(...) C.
LieElement bracket(const LieElement& x, const LieElement& y);

// Anti-involution on monomials: sigma(t^k f(D)) = (-1)^k t^k f(-D-k), with the
// decrees sigma(w_{0,0}) = -w_{0,0} and sigma(C) = -C.
LieElement sigma_apply(const LieElement& x);

// Fixed points of -sigma: t-degree-j component equal to t^j p(D + j/2) where p
// has only odd-degree terms for even j and only even-degree terms for odd j.
// The degree-zero constant (w_{0,0}) and C are admitted by decree.
bool is_in_wminus(const LieElement& x);

// Canonical basis element b_{j,l} = t^j (D + j/2)^l, defined for j + l odd and
// for (j,l) = (0,0).
LieElement wminus_basis_element(int64_t j, int64_t l);

// Decomposition over the spanning family {b_{j,l}} + Q w_{0,0} + Q C.
struct BDecomp {
  std::map<std::pair<int64_t, int64_t>, Scalar> b;  // (j,l) -> coeff, j+l odd
  Scalar c00{};  // coefficient of w_{0,0}
  Scalar cC{};   // coefficient of C
};
std::optional<BDecomp> to_bbasis(const LieElement& x);

// Canonical text form, terms sorted by (k,l) descending, central term last:
// "-3*w[1,2] + -1*w[1,0] + 2*C".
std::string render(const LieElement& x);

}  // namespace wminus
