#include "wminus/scalar.hpp"

#include <stdexcept>

namespace wminus {

Scalar Scalar::inverse() const {
  Rat norm = a * a - 2 * b * b;
  if (norm == 0) throw std::domain_error("Scalar::inverse: division by zero");
  return Scalar(a / norm, -b / norm);
}

std::string render(const Rat& r) { return r.str(); }

std::string render(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  if (s.a != 0) out = render(s.a);
  if (s.b != 0) {
    if (!out.empty()) out += " + ";
    out += render(s.b) + "*s2";
  }
  return out;
}

std::string render_coeff(const Scalar& s) {
  if (s.a != 0 && s.b != 0) return "(" + render(s) + ")";
  return render(s);
}

}  // namespace wminus
