#include "wminus/lie.hpp"

#include <stdexcept>

namespace wminus {

DPoly DPoly::monomial(int64_t deg, Scalar coeff) {
  DPoly f;
  if (coeff.is_zero()) return f;
  f.c.assign(static_cast<size_t>(deg) + 1, Scalar(0));
  f.c[static_cast<size_t>(deg)] = std::move(coeff);
  return f;
}

void DPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Scalar DPoly::eval(const Rat& x) const {
  Scalar acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * Scalar(x) + c[i];
  return acc;
}

DPoly operator+(const DPoly& f, const DPoly& g) {
  DPoly out;
  out.c.resize(std::max(f.c.size(), g.c.size()), Scalar(0));
  for (size_t i = 0; i < f.c.size(); ++i) out.c[i] += f.c[i];
  for (size_t i = 0; i < g.c.size(); ++i) out.c[i] += g.c[i];
  out.trim();
  return out;
}

DPoly operator-(const DPoly& f, const DPoly& g) {
  DPoly neg = g;
  for (auto& x : neg.c) x = -x;
  return f + neg;
}

DPoly operator*(const DPoly& f, const DPoly& g) {
  DPoly out;
  if (f.is_zero() || g.is_zero()) return out;
  out.c.assign(f.c.size() + g.c.size() - 1, Scalar(0));
  for (size_t i = 0; i < f.c.size(); ++i)
    for (size_t j = 0; j < g.c.size(); ++j) out.c[i + j] += f.c[i] * g.c[j];
  out.trim();
  return out;
}

// Horner form: f(D + t) accumulated from the top coefficient down.
DPoly DPoly::shifted(const Rat& t) const {
  DPoly acc;
  for (size_t i = c.size(); i-- > 0;) {
    // acc = acc * (D + t) + c[i]
    DPoly next;
    next.c.assign(acc.c.size() + 1, Scalar(0));
    for (size_t j = 0; j < acc.c.size(); ++j) {
      next.c[j + 1] += acc.c[j];
      next.c[j] += acc.c[j] * Scalar(t);
    }
    if (next.c.empty()) next.c.push_back(Scalar(0));
    next.c[0] += c[i];
    next.trim();
    acc = next;
  }
  return acc;
}

DPoly DPoly::reflected_shift(const Rat& t) const {
  DPoly acc;
  for (size_t i = c.size(); i-- > 0;) {
    DPoly next;
    next.c.assign(acc.c.size() + 1, Scalar(0));
    for (size_t j = 0; j < acc.c.size(); ++j) {
      next.c[j + 1] -= acc.c[j];
      next.c[j] += acc.c[j] * Scalar(t);
    }
    if (next.c.empty()) next.c.push_back(Scalar(0));
    next.c[0] += c[i];
    next.trim();
    acc = next;
  }
  return acc;
}

DPoly shift_poly(const DPoly& f, const Rat& t) { return f.shifted(t); }

void LieElement::add_term(int64_t k, int64_t l, const Scalar& s) {
  if (s.is_zero()) return;
  auto key = std::make_pair(k, l);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void LieElement::add(const LieElement& o, const Scalar& scale) {
  for (const auto& [kl, v] : o.terms) add_term(kl.first, kl.second, v * scale);
  cC += o.cC * scale;
}

LieElement operator*(const Scalar& s, LieElement x) {
  if (s.is_zero()) return LieElement{};
  for (auto& [kl, v] : x.terms) v *= s;
  x.cC *= s;
  return x;
}

std::map<int64_t, DPoly> LieElement::components() const {
  std::map<int64_t, DPoly> out;
  for (const auto& [kl, v] : terms) {
    auto& f = out[kl.first];
    if (f.degree() < kl.second) f.c.resize(static_cast<size_t>(kl.second) + 1, Scalar(0));
    f.c[static_cast<size_t>(kl.second)] += v;
  }
  for (auto it = out.begin(); it != out.end();) {
    it->second.trim();
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

LieElement lie_w(int64_t k, int64_t l, Scalar coeff) {
  LieElement x;
  x.add_term(k, l, coeff);
  return x;
}

LieElement lie_central(Scalar coeff) {
  LieElement x;
  x.cC = std::move(coeff);
  return x;
}

Scalar cocycle_psi(int64_t r, const DPoly& f, int64_t s, const DPoly& g) {
  if (r + s != 0 || r == 0) return Scalar(0);
  if (r < 0) return -cocycle_psi(s, g, r, f);
  Scalar acc(0);
  for (int64_t j = -r; j <= -1; ++j) acc += f.eval(Rat(j)) * g.eval(Rat(j + r));
  return acc;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  LieElement out;
  auto xs = x.components();
  auto ys = y.components();
  for (const auto& [r, f] : xs) {
    for (const auto& [s, g] : ys) {
      DPoly poly = f.shifted(Rat(s)) * g - f * g.shifted(Rat(r));
      for (size_t i = 0; i < poly.c.size(); ++i)
        out.add_term(r + s, static_cast<int64_t>(i), poly.c[i]);
      out.cC += cocycle_psi(r, f, s, g);
    }
  }
  return out;
}

LieElement sigma_apply(const LieElement& x) {
  LieElement out;
  out.cC = -x.cC;
  for (const auto& [k, f] : x.components()) {
    // sigma(t^k f(D)) = (-1)^k t^k f(-D-k); the constant at k = 0 flips by decree.
    DPoly img = f.reflected_shift(Rat(-k));
    Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
    for (size_t i = 0; i < img.c.size(); ++i) {
      Scalar v = sign * img.c[i];
      if (k == 0 && i == 0) v = -v;
      out.add_term(k, static_cast<int64_t>(i), v);
    }
  }
  return out;
}

bool is_in_wminus(const LieElement& x) {
  for (const auto& [j, f] : x.components()) {
    DPoly p = f.shifted(-Rat(j) / 2);  // f(D) = p(D + j/2)
    for (size_t i = 0; i < p.c.size(); ++i) {
      if (p.c[i].is_zero()) continue;
      bool even_deg = (i % 2 == 0);
      if (j % 2 == 0) {
        if (even_deg && !(j == 0 && i == 0)) return false;  // w_{0,0} admitted
      } else {
        if (!even_deg) return false;
      }
    }
  }
  return true;
}

LieElement wminus_basis_element(int64_t j, int64_t l) {
  bool odd = ((j + l) % 2 + 2) % 2 == 1;
  if (!odd && !(j == 0 && l == 0))
    throw std::invalid_argument("wminus_basis_element: need j + l odd or (0,0)");
  DPoly p = DPoly::monomial(l).shifted(Rat(j) / 2);  // (D + j/2)^l
  LieElement out;
  for (size_t i = 0; i < p.c.size(); ++i) out.add_term(j, static_cast<int64_t>(i), p.c[i]);
  return out;
}

std::optional<BDecomp> to_bbasis(const LieElement& x) {
  BDecomp d;
  d.cC = x.cC;
  for (const auto& [j, f] : x.components()) {
    DPoly p = f.shifted(-Rat(j) / 2);
    for (size_t i = 0; i < p.c.size(); ++i) {
      if (p.c[i].is_zero()) continue;
      bool even_deg = (i % 2 == 0);
      if (j == 0 && i == 0) {
        d.c00 = p.c[i];
        continue;
      }
      if ((j % 2 == 0) == !even_deg) {
        d.b[{j, static_cast<int64_t>(i)}] = p.c[i];
      } else {
        return std::nullopt;
      }
    }
  }
  return d;
}

std::string render(const LieElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += " + ";
    out += piece;
  };
  for (auto it = x.terms.rbegin(); it != x.terms.rend(); ++it)
    append(render_coeff(it->second) + "*w[" + std::to_string(it->first.first) + "," +
           std::to_string(it->first.second) + "]");
  if (!x.cC.is_zero()) append(render_coeff(x.cC) + "*C");
  return out;
}

}  // namespace wminus
