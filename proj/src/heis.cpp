#include "wminus/heis.hpp"

#include <stdexcept>

namespace wminus {

void HeisElement::add_term(int64_t n, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = terms.find(n);
  if (it == terms.end()) {
    terms.emplace(n, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) terms.erase(it);
  }
}

HeisElement heis_h(int64_t odd_numerator, Scalar coeff) {
  if (odd_numerator % 2 == 0)
    throw std::invalid_argument("heis_h: index must be an odd numerator over 2");
  HeisElement x;
  x.add_term(odd_numerator, std::move(coeff));
  return x;
}

HeisElement heis_bracket(const HeisElement& x, const HeisElement& y) {
  HeisElement out;
  for (const auto& [n, a] : x.terms) {
    auto it = y.terms.find(-n);
    if (it == y.terms.end()) continue;
    out.cK += Scalar(Rat(n) / 2) * a * it->second;
  }
  return out;
}

LieElement heis_embed(const HeisElement& x) {
  LieElement out;
  Scalar inv_sqrt2 = Scalar(Rat(1) / 2) * Scalar::sqrt2();
  for (const auto& [n, a] : x.terms) out.add_term(n, 0, a * inv_sqrt2);
  out.cC = x.cK;
  return out;
}

std::string render(const HeisElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [n, a] : x.terms) {
    if (!out.empty()) out += " + ";
    out += render_coeff(a) + "*h[" + std::to_string(n) + "/2]";
  }
  if (!x.cK.is_zero()) {
    if (!out.empty()) out += " + ";
    out += render_coeff(x.cK) + "*K";
  }
  return out;
}

}  // namespace wminus
