#include "wminus/env.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace wminus {

bool pbw_less(const EnvGen& x, const EnvGen& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.kind != EnvGen::B) return false;  // central generators are mutually equal-rank
  if (x.j != y.j) return x.j > y.j;       // high t-degree first
  return x.l < y.l;
}

void EnvElement::add_word(const Word& w, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void EnvElement::add(const EnvElement& o, const Scalar& scale) {
  for (const auto& [w, v] : o.terms) add_word(w, v * scale);
}

EnvElement operator*(const Scalar& s, EnvElement x) {
  if (s.is_zero()) return EnvElement{};
  for (auto& [w, v] : x.terms) v *= s;
  return x;
}

EnvElement env_scalar(Scalar s) {
  EnvElement e;
  e.add_word({}, s);
  return e;
}

EnvElement env_gen(int64_t j, int64_t l, Scalar coeff) {
  bool odd = ((j + l) % 2 + 2) % 2 == 1;
  if (!odd && !(j == 0 && l == 0)) throw std::invalid_argument("env_gen: need j + l odd or (0,0)");
  EnvElement e;
  EnvGen g{(j == 0 && l == 0) ? EnvGen::W00 : EnvGen::B, j, l};
  if (g.kind == EnvGen::W00) g.j = g.l = 0;
  e.add_word({g}, coeff);
  return e;
}

EnvElement env_central(Scalar coeff) {
  EnvElement e;
  e.add_word({EnvGen{EnvGen::C, 0, 0}}, coeff);
  return e;
}

EnvElement env_from_bdecomp(const BDecomp& d) {
  EnvElement e;
  for (const auto& [jl, v] : d.b) e.add(env_gen(jl.first, jl.second, v));
  if (!d.c00.is_zero()) e.add_word({EnvGen{EnvGen::W00, 0, 0}}, d.c00);
  if (!d.cC.is_zero()) e.add_word({EnvGen{EnvGen::C, 0, 0}}, d.cC);
  return e;
}

EnvElement env_from_lie(const LieElement& x) {
  auto d = to_bbasis(x);
  if (!d) throw std::domain_error("env_from_lie: element outside the spanning family");
  return env_from_bdecomp(*d);
}

namespace {

struct BracketExpansion {
  std::vector<std::pair<EnvGen, Scalar>> gens;  // single-generator terms
  Scalar c00, cC;
};

// [x, y] for b-generators, re-expanded over the spanning family.  Cached; the
// closure property guarantees the decomposition exists.
const BracketExpansion& gen_bracket(const EnvGen& x, const EnvGen& y) {
  static std::map<std::pair<std::pair<int64_t, int64_t>, std::pair<int64_t, int64_t>>,
                  BracketExpansion>
      cache;
  static std::mutex mu;
  auto key = std::make_pair(std::make_pair(x.j, x.l), std::make_pair(y.j, y.l));
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  LieElement lx = (x.kind == EnvGen::B) ? wminus_basis_element(x.j, x.l) : LieElement{};
  LieElement ly = (y.kind == EnvGen::B) ? wminus_basis_element(y.j, y.l) : LieElement{};
  auto d = to_bbasis(bracket(lx, ly));
  if (!d) throw std::logic_error("gen_bracket: bracket escaped the spanning family");
  BracketExpansion exp;
  exp.c00 = d->c00;
  exp.cC = d->cC;
  for (const auto& [jl, v] : d->b)
    exp.gens.emplace_back(EnvGen{EnvGen::B, jl.first, jl.second}, v);
  return cache.emplace(key, std::move(exp)).first->second;
}

// Drop positions [skip_lo, skip_hi) and insert a central generator at its
// sorted position (front region).
Word with_central(const Word& w, size_t skip_lo, size_t skip_hi, EnvGen::Kind kind) {
  Word rest;
  rest.reserve(w.size());
  for (size_t i = 0; i < w.size(); ++i)
    if (i < skip_lo || i >= skip_hi) rest.push_back(w[i]);
  size_t pos = 0;
  while (pos < rest.size() && rest[pos].kind < kind) ++pos;
  rest.insert(rest.begin() + static_cast<long>(pos), EnvGen{kind, 0, 0});
  return rest;
}

}  // namespace

EnvElement pbw_normal_form(const EnvElement& a) {
  EnvElement done;
  std::vector<std::pair<Word, Scalar>> work(a.terms.begin(), a.terms.end());
  while (!work.empty()) {
    auto [w, coeff] = std::move(work.back());
    work.pop_back();
    if (coeff.is_zero()) continue;

    size_t inv = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (pbw_less(w[i + 1], w[i])) {
        inv = i;
        break;
      }
    }
    if (inv == w.size()) {
      done.add_word(w, coeff);
      continue;
    }

    Word swapped = w;
    std::swap(swapped[inv], swapped[inv + 1]);
    work.emplace_back(std::move(swapped), coeff);

    if (w[inv].kind != EnvGen::B || w[inv + 1].kind != EnvGen::B) continue;  // central: [x,y]=0
    const auto& exp = gen_bracket(w[inv], w[inv + 1]);
    for (const auto& [g, v] : exp.gens) {
      Word spliced;
      spliced.reserve(w.size() - 1);
      spliced.insert(spliced.end(), w.begin(), w.begin() + static_cast<long>(inv));
      spliced.push_back(g);
      spliced.insert(spliced.end(), w.begin() + static_cast<long>(inv) + 2, w.end());
      work.emplace_back(std::move(spliced), coeff * v);
    }
    if (!exp.cC.is_zero())
      work.emplace_back(with_central(w, inv, inv + 2, EnvGen::C), coeff * exp.cC);
    if (!exp.c00.is_zero())
      work.emplace_back(with_central(w, inv, inv + 2, EnvGen::W00), coeff * exp.c00);
  }
  return done;
}

EnvElement multiply(const EnvElement& a, const EnvElement& b) {
  EnvElement prod;
  for (const auto& [wa, va] : a.terms) {
    for (const auto& [wb, vb] : b.terms) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      prod.add_word(w, va * vb);
    }
  }
  return pbw_normal_form(prod);
}

EnvElement quotient_reduce(const EnvElement& a) {
  EnvElement out;
  for (const auto& [w, v] : a.terms) {
    Word kept;
    kept.reserve(w.size());
    bool dead = false;
    for (const auto& g : w) {
      if (g.kind == EnvGen::W00) {
        dead = true;
        break;
      }
      if (g.kind != EnvGen::C) kept.push_back(g);
    }
    if (!dead) out.add_word(kept, v);
  }
  return out;
}

EnvElement env_bracket(const EnvElement& a, const EnvElement& b) {
  return quotient_reduce(multiply(a, b) - multiply(b, a));
}

int64_t dot_degree(const Word& w) {
  int64_t d = 0;
  for (const auto& g : w)
    if (g.kind == EnvGen::B) d += g.l;
  return d;
}

EnvElement leading_dot_part(const EnvElement& a) {
  int64_t top = INT64_MIN;
  for (const auto& [w, v] : a.terms) top = std::max(top, dot_degree(w));
  EnvElement out;
  for (const auto& [w, v] : a.terms)
    if (dot_degree(w) == top) out.add_word(w, v);
  return out;
}

namespace {

std::string render_gen(const EnvGen& g) {
  if (g.kind == EnvGen::C) return "C";
  if (g.kind == EnvGen::W00) return "b[0,0]";
  return "b[" + std::to_string(g.j) + "," + std::to_string(g.l) + "]";
}

bool render_word_less(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() > y.size();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), pbw_less);
}

}  // namespace

std::string render(const EnvElement& a) {
  if (a.is_zero()) return "0";
  std::vector<const std::pair<const Word, Scalar>*> order;
  order.reserve(a.terms.size());
  for (const auto& t : a.terms) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* p, auto* q) { return render_word_less(p->first, q->first); });
  std::string out;
  for (auto* t : order) {
    if (!out.empty()) out += " + ";
    if (t->first.empty()) {
      out += render(t->second);
      continue;
    }
    out += render_coeff(t->second);
    for (const auto& g : t->first) out += "*" + render_gen(g);
  }
  return out;
}

}  // namespace wminus
