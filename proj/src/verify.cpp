#include "wminus/verify.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wminus/dims.hpp"
#include "wminus/fock.hpp"
#include "wminus/heis.hpp"
#include "wminus/parse.hpp"

namespace wminus {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Deterministic sampler: each check derives its stream from (seed, check id),
// so adding or reordering checks never shifts another check's samples.
struct Sampler {
  std::mt19937_64 rng;
  Sampler(uint64_t seed, const std::string& id) : rng(seed ^ fnv1a(id)) {}

  int64_t uniform(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
  }
  Scalar coeff() {
    Scalar s(Rat(uniform(-4, 4)) / Rat(uniform(1, 3)));
    if (uniform(0, 3) == 0) s += Scalar(Rat(0), Rat(uniform(-2, 2)));
    if (s.is_zero()) s = Scalar(1);
    return s;
  }
  std::pair<int64_t, int64_t> bparams(int64_t max_t, int64_t max_d) {
    while (true) {
      int64_t j = uniform(-max_t, max_t);
      int64_t l = uniform(0, max_d);
      if (((j + l) % 2 + 2) % 2 == 1) return {j, l};
    }
  }
  LieElement random_wminus(int64_t max_t, int64_t max_d) {
    LieElement x;
    int64_t n = uniform(1, 3);
    for (int64_t i = 0; i < n; ++i) {
      auto [j, l] = bparams(max_t, max_d);
      x.add(wminus_basis_element(j, l), coeff());
    }
    if (uniform(0, 2) == 0) x.add(lie_w(0, 0), coeff());
    if (uniform(0, 2) == 0) x.add(lie_central(), coeff());
    return x;
  }
  // Unconstrained monomial sums; exercises the cocycle away from the subalgebra.
  LieElement random_dhat(int64_t max_t, int64_t max_d) {
    LieElement x;
    int64_t n = uniform(1, 3);
    for (int64_t i = 0; i < n; ++i) x.add(lie_w(uniform(-max_t, max_t), uniform(0, max_d)), coeff());
    if (uniform(0, 2) == 0) x.add(lie_central(), coeff());
    return x;
  }
  DPoly random_poly(int64_t max_d) {
    std::vector<Scalar> c(static_cast<size_t>(uniform(0, max_d)) + 1);
    for (auto& v : c) v = coeff();
    return DPoly(std::move(c));
  }
  EnvGen random_gen() {
    int64_t pick = uniform(0, 9);
    if (pick == 0) return EnvGen{EnvGen::C, 0, 0};
    if (pick == 1) return EnvGen{EnvGen::W00, 0, 0};
    auto [j, l] = bparams(3, 3);
    return EnvGen{EnvGen::B, j, l};
  }
  EnvElement random_env_raw() {
    EnvElement x;
    int64_t n = uniform(1, 2);
    for (int64_t i = 0; i < n; ++i) {
      Word w;
      int64_t len = uniform(0, 2);
      for (int64_t f = 0; f < len; ++f) w.push_back(random_gen());
      x.add_word(w, coeff());
    }
    return x;
  }
  EnvElement random_env() { return pbw_normal_form(random_env_raw()); }
};

void push(std::vector<RelationReport>& out, const std::string& suite, const std::string& id,
          bool ok, std::string note) {
  out.push_back({suite, id, ok ? "OK" : "FAIL", !ok, std::move(note)});
}

LieElement lie_from_gen(const EnvGen& g) {
  if (g.kind == EnvGen::C) return lie_central();
  if (g.kind == EnvGen::W00) return lie_w(0, 0);
  return wminus_basis_element(g.j, g.l);
}

EnvElement env_single(const EnvGen& g) {
  if (g.kind == EnvGen::C) return env_central();
  return env_gen(g.j, g.l);
}

// ---------------------------------------------------------------------------
// lie: structure laws of the bracket, the 2-cocycle, and the involution.

void suite_lie(const VerifyOptions& o, std::vector<RelationReport>& out) {
  std::string range = ", |t| <= " + std::to_string(o.max_tdeg) + ", dots <= " + std::to_string(o.max_dot);
  {
    Sampler s(o.seed, "lie.jacobi");
    int bad = 0;
    for (int i = 0; i < o.lie_samples; ++i) {
      LieElement x = s.random_dhat(o.max_tdeg, o.max_dot);
      LieElement y = s.random_dhat(o.max_tdeg, o.max_dot);
      LieElement z = s.random_dhat(o.max_tdeg, o.max_dot);
      LieElement j =
          bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
      if (!j.is_zero()) ++bad;
    }
    push(out, "lie", "jacobi", bad == 0, std::to_string(o.lie_samples) + " random triples" + range);
  }
  {
    Sampler s(o.seed, "lie.antisymmetry");
    int bad = 0;
    for (int i = 0; i < o.lie_samples; ++i) {
      LieElement x = s.random_dhat(o.max_tdeg, o.max_dot);
      LieElement y = s.random_dhat(o.max_tdeg, o.max_dot);
      if (!(bracket(x, y) + bracket(y, x)).is_zero()) ++bad;
    }
    push(out, "lie", "antisymmetry", bad == 0, std::to_string(o.lie_samples) + " random pairs" + range);
  }
  {
    Sampler s(o.seed, "lie.bilinearity");
    int bad = 0;
    for (int i = 0; i < o.lie_samples; ++i) {
      LieElement x = s.random_dhat(o.max_tdeg, o.max_dot);
      LieElement y = s.random_dhat(o.max_tdeg, o.max_dot);
      LieElement z = s.random_dhat(o.max_tdeg, o.max_dot);
      Scalar a = s.coeff(), b = s.coeff();
      LieElement lhs = bracket(a * x + b * y, z);
      LieElement rhs = a * bracket(x, z) + b * bracket(y, z);
      if (!(lhs == rhs)) ++bad;
    }
    push(out, "lie", "bilinearity", bad == 0, std::to_string(o.lie_samples) + " random triples" + range);
  }
  {
    Sampler s(o.seed, "lie.cocycle-antisymmetry");
    int bad = 0;
    for (int i = 0; i < o.lie_samples; ++i) {
      int64_t r = s.uniform(-o.max_tdeg, o.max_tdeg);
      int64_t t = s.uniform(-o.max_tdeg, o.max_tdeg);
      DPoly f = s.random_poly(o.max_dot), g = s.random_poly(o.max_dot);
      if (!(cocycle_psi(r, f, t, g) + cocycle_psi(t, g, r, f)).is_zero()) ++bad;
    }
    push(out, "lie", "cocycle-antisymmetry", bad == 0, std::to_string(o.lie_samples) + " polynomial pairs" + range);
  }
  {
    Sampler s(o.seed, "lie.cocycle-support");
    int bad = 0;
    for (int i = 0; i < o.lie_samples; ++i) {
      int64_t r = s.uniform(-o.max_tdeg, o.max_tdeg);
      int64_t t = s.uniform(-o.max_tdeg, o.max_tdeg);
      if (r + t == 0) t += 1;
      DPoly f = s.random_poly(o.max_dot), g = s.random_poly(o.max_dot);
      if (!cocycle_psi(r, f, t, g).is_zero()) ++bad;
    }
    push(out, "lie", "cocycle-support", bad == 0,
         "vanishes whenever the t-degrees do not cancel; " + std::to_string(o.lie_samples) + " pairs");
  }
  {
    Sampler s(o.seed, "lie.sigma-involution");
    int bad = 0;
    for (int i = 0; i < o.lie_samples; ++i) {
      LieElement x = s.random_dhat(o.max_tdeg, o.max_dot);
      if (!(sigma_apply(sigma_apply(x)) == x)) ++bad;
    }
    push(out, "lie", "sigma-involution", bad == 0, std::to_string(o.lie_samples) + " random elements" + range);
  }
  {
    Sampler s(o.seed, "lie.sigma-antiautomorphism");
    int bad = 0;
    for (int i = 0; i < o.lie_samples; ++i) {
      LieElement x = s.random_dhat(o.max_tdeg, o.max_dot);
      LieElement y = s.random_dhat(o.max_tdeg, o.max_dot);
      LieElement defect = sigma_apply(bracket(x, y)) + bracket(sigma_apply(x), sigma_apply(y));
      for (const auto& [key, c] : defect.terms) {
        if (key != std::pair<int64_t, int64_t>(0, 0)) {
          ++bad;
          break;
        }
      }
    }
    push(out, "lie", "sigma-antiautomorphism", bad == 0,
         "sigma[x,y] + [sigma x, sigma y] lands in span{w[0,0], C}: the reflection shifts the "
         "cocycle window and the w[0,0] sign is decreed; " +
             std::to_string(o.lie_samples) + " pairs" + range);
  }
  {
    Sampler s(o.seed, "lie.sigma-antiautomorphism-members");
    int bad = 0;
    for (int i = 0; i < o.lie_samples; ++i) {
      LieElement x = s.random_wminus(o.max_tdeg, o.max_dot);
      LieElement y = s.random_wminus(o.max_tdeg, o.max_dot);
      LieElement lhs = sigma_apply(bracket(x, y));
      LieElement rhs = Scalar(-1) * bracket(sigma_apply(x), sigma_apply(y));
      if (!(lhs == rhs)) ++bad;
    }
    push(out, "lie", "sigma-antiautomorphism-members", bad == 0,
         "on members the full law sigma[x,y] = -[sigma x, sigma y] holds with the central term; " +
             std::to_string(o.lie_samples) + " pairs" + range);
  }
  {
    Sampler s(o.seed, "lie.closure");
    int bad = 0;
    for (int i = 0; i < o.lie_samples; ++i) {
      LieElement x = s.random_wminus(o.max_tdeg, o.max_dot);
      LieElement y = s.random_wminus(o.max_tdeg, o.max_dot);
      if (!is_in_wminus(bracket(x, y))) ++bad;
    }
    push(out, "lie", "closure", bad == 0,
         "brackets of members stay members; " + std::to_string(o.lie_samples) + " pairs" + range);
  }
  {
    Sampler s(o.seed, "lie.fixed-sign");
    int bad = 0;
    for (int i = 0; i < o.lie_samples; ++i) {
      LieElement x = s.random_wminus(o.max_tdeg, o.max_dot);
      if (!(sigma_apply(x) == Scalar(-1) * x)) ++bad;
    }
    push(out, "lie", "fixed-sign", bad == 0,
         "members satisfy sigma x = -x; " + std::to_string(o.lie_samples) + " samples" + range);
  }
  {
    Sampler s(o.seed, "lie.bbasis-roundtrip");
    int bad = 0;
    for (int i = 0; i < o.lie_samples; ++i) {
      LieElement x = s.random_wminus(o.max_tdeg, o.max_dot);
      auto d = to_bbasis(x);
      if (!d) {
        ++bad;
        continue;
      }
      LieElement back = d->c00 * lie_w(0, 0) + d->cC * lie_central();
      for (const auto& [jl, c] : d->b) back.add(wminus_basis_element(jl.first, jl.second), c);
      if (!(back == x)) ++bad;
    }
    push(out, "lie", "bbasis-roundtrip", bad == 0,
         "decompose and rebuild; " + std::to_string(o.lie_samples) + " samples" + range);
  }
  {
    bool ok = !is_in_wminus(lie_w(2, 1)) && is_in_wminus(lie_w(2, 1) + lie_w(2, 0)) &&
              !is_in_wminus(lie_w(2, 0)) && !is_in_wminus(lie_w(0, 2)) &&
              is_in_wminus(lie_w(0, 3)) && is_in_wminus(lie_w(1, 0)) &&
              is_in_wminus(lie_w(0, 0)) && is_in_wminus(lie_central());
    push(out, "lie", "membership-probes", ok,
         "w[2,1] needs its w[2,0] partner; the degree-zero constant and C are admitted");
  }
  {
    bool ok = sigma_apply(lie_w(1, 0)) == Scalar(-1) * lie_w(1, 0) &&
              sigma_apply(lie_w(2, 1) + lie_w(2, 0)) == Scalar(-1) * (lie_w(2, 1) + lie_w(2, 0)) &&
              sigma_apply(lie_w(0, 0)) == Scalar(-1) * lie_w(0, 0) &&
              sigma_apply(lie_central()) == Scalar(-1) * lie_central();
    push(out, "lie", "sigma-pins", ok, "sign of sigma on basis members and the decreed pair");
  }
  {
    bool ok = bracket(lie_w(1, 0), lie_w(-1, 0)) == lie_central() &&
              bracket(lie_w(1, 2), lie_w(-1, 0)) ==
                  Scalar(-2) * lie_w(0, 1) + lie_w(0, 0) + lie_central() &&
              bracket(lie_w(1, 0), lie_w(0, 3)) ==
                  Scalar(-3) * lie_w(1, 2) + Scalar(-3) * lie_w(1, 1) + Scalar(-1) * lie_w(1, 0) &&
              bracket(lie_w(-2, 1) - lie_w(-2, 0), lie_w(1, 0)) == lie_w(-1, 0);
    push(out, "lie", "bracket-pins", ok, "four hand-checked brackets, central term included");
  }
}

// ---------------------------------------------------------------------------
// pbw: straightening, associativity, and agreement with the Lie bracket.

void suite_pbw(const VerifyOptions& o, std::vector<RelationReport>& out) {
  {
    Sampler s(o.seed, "pbw.associativity");
    int bad = 0;
    for (int i = 0; i < o.pbw_samples; ++i) {
      EnvElement a = s.random_env(), b = s.random_env(), c = s.random_env();
      if (!(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)))) ++bad;
    }
    push(out, "pbw", "associativity", bad == 0, std::to_string(o.pbw_samples) + " random triples");
  }
  {
    Sampler s(o.seed, "pbw.commutator-vs-bracket");
    int bad = 0;
    for (int i = 0; i < o.pbw_samples; ++i) {
      EnvGen x = s.random_gen(), y = s.random_gen();
      EnvElement lhs = multiply(env_single(x), env_single(y)) - multiply(env_single(y), env_single(x));
      EnvElement rhs = pbw_normal_form(env_from_lie(bracket(lie_from_gen(x), lie_from_gen(y))));
      if (!(lhs == rhs)) ++bad;
    }
    push(out, "pbw", "commutator-vs-bracket", bad == 0,
         "generator commutators reproduce the bracket before any quotient; " +
             std::to_string(o.pbw_samples) + " pairs");
  }
  {
    Sampler s(o.seed, "pbw.normal-form-idempotent");
    int bad = 0;
    for (int i = 0; i < o.pbw_samples; ++i) {
      EnvElement nf = pbw_normal_form(s.random_env_raw());
      if (!(pbw_normal_form(nf) == nf)) ++bad;
    }
    push(out, "pbw", "normal-form-idempotent", bad == 0, std::to_string(o.pbw_samples) + " samples");
  }
  {
    Sampler s(o.seed, "pbw.normal-form-sorted");
    int bad = 0;
    for (int i = 0; i < o.pbw_samples; ++i) {
      EnvElement nf = pbw_normal_form(s.random_env_raw());
      for (const auto& [w, c] : nf.terms)
        for (size_t f = 0; f + 1 < w.size(); ++f)
          if (pbw_less(w[f + 1], w[f])) ++bad;
    }
    push(out, "pbw", "normal-form-sorted", bad == 0,
         "every straightened word is weakly increasing; " + std::to_string(o.pbw_samples) + " samples");
  }
  {
    Sampler s(o.seed, "pbw.quotient-consistency");
    int bad = 0;
    for (int i = 0; i < o.pbw_samples; ++i) {
      EnvElement a = s.random_env(), b = s.random_env();
      EnvElement q1 = quotient_reduce(multiply(a, b));
      EnvElement q2 = quotient_reduce(multiply(quotient_reduce(a), quotient_reduce(b)));
      if (!(q1 == q2)) ++bad;
      if (!(quotient_reduce(q1) == q1)) ++bad;
      for (const auto& [w, c] : q1.terms)
        for (const auto& g : w)
          if (g.kind != EnvGen::B) ++bad;
    }
    push(out, "pbw", "quotient-consistency", bad == 0,
         "reducing C to 1 and dropping the degree-zero constant commutes with products");
  }
  {
    Sampler s(o.seed, "pbw.env-bracket");
    int bad = 0;
    for (int i = 0; i < o.pbw_samples; ++i) {
      EnvGen x = s.random_gen(), y = s.random_gen();
      EnvElement lhs = env_bracket(env_single(x), env_single(y));
      EnvElement rhs = quotient_reduce(env_from_lie(bracket(lie_from_gen(x), lie_from_gen(y))));
      if (!(lhs == rhs)) ++bad;
    }
    push(out, "pbw", "env-bracket", bad == 0,
         "reduced commutator agrees with the reduced bracket; " + std::to_string(o.pbw_samples) + " pairs");
  }
}

// ---------------------------------------------------------------------------
// fock: the level-one action on partitions.

void suite_fock(const VerifyOptions& o, std::vector<RelationReport>& out) {
  std::vector<LieElement> gens;
  std::vector<std::pair<int64_t, int64_t>> bparams;
  for (int64_t j = -4; j <= 4; ++j)
    for (int64_t l = 0; l <= 3; ++l)
      if (((j + l) % 2 + 2) % 2 == 1) {
        gens.push_back(wminus_basis_element(j, l));
        bparams.push_back({j, l});
      }
  size_t nb = gens.size();
  gens.push_back(lie_w(0, 0));
  gens.push_back(lie_central());
  std::vector<Partition> parts = partitions_up_to(o.fock_bound);
  {
    int bad = 0;
    int64_t count = 0;
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j) {
        LieElement br = bracket(gens[i], gens[j]);
        for (const Partition& p : parts) {
          FockVector base = fock_basis(p);
          FockVector lhs =
              act_lie(gens[i], act_lie(gens[j], base)) - act_lie(gens[j], act_lie(gens[i], base));
          if (!(lhs == act_lie(br, base))) ++bad;
          ++count;
        }
      }
    push(out, "fock", "representation-commutator", bad == 0,
         std::to_string(count) + " (pair, partition) checks, generators |t| <= 4, dots <= 3, sizes <= " +
             std::to_string(o.fock_bound));
  }
  {
    int bad = 0;
    for (size_t i = 0; i < nb; ++i)
      for (const Partition& p : parts) {
        int64_t target = weight(p) - bparams[i].first;
        for (const auto& [q, c] : act_lie(gens[i], fock_basis(p)).terms)
          if (weight(q) != target) ++bad;
      }
    push(out, "fock", "weight-grading", bad == 0,
         "t-degree j moves size by -j across all generators and sizes <= " + std::to_string(o.fock_bound));
  }
  {
    int bad = 0;
    for (size_t i = 0; i < nb; ++i)
      if (bparams[i].first >= 1 && !act_lie(gens[i], fock_basis({})).is_zero()) ++bad;
    push(out, "fock", "vacuum-annihilation", bad == 0, "positive t-degree generators kill the vacuum");
  }
  {
    int bad = 0;
    for (const Partition& p : parts) {
      FockVector base = fock_basis(p);
      if (!(act_lie(lie_w(0, 0), base) == Scalar(-1) * base)) ++bad;
      if (!(act_lie(lie_central(), base) == base)) ++bad;
      if (!(act_lie(lie_w(0, 1), base) == Scalar(Rat(-weight(p))) * base)) ++bad;
    }
    push(out, "fock", "diagonal-eigenvalues", bad == 0,
         "w[0,0] acts as -1, C as 1, and w[0,1] as minus the size");
  }
  {
    FockVector two_one;
    two_one.add_term({2}, Scalar(1));
    two_one.add_term({1, 1}, Scalar(1));
    bool ok = act_lie(lie_w(-1, 0), fock_basis({})) == fock_basis({1}) &&
              act_lie(lie_w(-1, 0), fock_basis({1})) == two_one &&
              act_lie(lie_w(1, 0), fock_basis({1})) == fock_basis({}) &&
              act_lie(lie_w(1, 0), fock_basis({})).is_zero();
    push(out, "fock", "hop-pins", ok, "hand-checked single hops near the vacuum");
  }
}

// ---------------------------------------------------------------------------
// heis: the twisted Heisenberg relations and the embedding.

void suite_heis(const VerifyOptions& o, std::vector<RelationReport>& out) {
  std::vector<int64_t> modes;
  for (int64_t n = -o.heis_bound; n <= o.heis_bound; ++n)
    if (((n % 2) + 2) % 2 == 1) modes.push_back(n);
  {
    int bad = 0;
    for (int64_t n : modes)
      for (int64_t m : modes) {
        HeisElement expect;
        if (m == -n) expect.cK = Scalar(Rat(n) / Rat(2));
        if (!(heis_bracket(heis_h(n), heis_h(m)) == expect)) ++bad;
      }
    push(out, "heis", "diagonal-pairing", bad == 0,
         "[h_a, h_b] = a delta_(a,-b) K over numerators |n| <= " + std::to_string(o.heis_bound));
  }
  {
    int bad = 0;
    for (int64_t n : modes)
      for (int64_t m : modes) {
        LieElement lhs = bracket(heis_embed(heis_h(n)), heis_embed(heis_h(m)));
        if (!(lhs == heis_embed(heis_bracket(heis_h(n), heis_h(m))))) ++bad;
      }
    push(out, "heis", "embedding-intertwines", bad == 0,
         "the bracket of images is the image of the bracket, K landing on C");
  }
  {
    int bad = 0;
    for (int64_t n : modes) {
      LieElement e = heis_embed(heis_h(n));
      if (!is_in_wminus(e)) ++bad;
      auto d = to_bbasis(e);
      if (!d || d->b.size() != 1 || !d->c00.is_zero() || !d->cC.is_zero()) ++bad;
    }
    push(out, "heis", "embedding-membership", bad == 0,
         "each mode lands on a single basis element inside the subalgebra");
  }
  {
    int bad = 0;
    int64_t cap = std::min<int64_t>(o.heis_bound, 7);
    int64_t psize = std::min<int64_t>(o.fock_bound, 6);
    std::vector<Partition> parts = partitions_up_to(psize);
    for (int64_t n : modes) {
      if (n < -cap || n > cap) continue;
      for (int64_t m : modes) {
        if (m < -cap || m > cap) continue;
        LieElement x = heis_embed(heis_h(n)), y = heis_embed(heis_h(m));
        Scalar k = (m == -n) ? Scalar(Rat(n) / Rat(2)) : Scalar(0);
        for (const Partition& p : parts) {
          FockVector base = fock_basis(p);
          FockVector lhs = act_lie(x, act_lie(y, base)) - act_lie(y, act_lie(x, base));
          if (!(lhs == k * base)) ++bad;
        }
      }
    }
    push(out, "heis", "fock-commutator", bad == 0,
         "mode commutators act as the pairing scalar, numerators |n| <= " + std::to_string(cap) +
             ", sizes <= " + std::to_string(psize));
  }
  {
    int bad = 0;
    for (int64_t n : modes)
      if (n >= 1 && !act_lie(heis_embed(heis_h(n)), fock_basis({})).is_zero()) ++bad;
    push(out, "heis", "vacuum-annihilation", bad == 0, "positive modes kill the vacuum");
  }
}

// ---------------------------------------------------------------------------
// gen: the spanning identities, engine value against frozen derivation and
// stated value.  EXPECTED-MISMATCH marks a stated value that the engine
// reproducibly contradicts; any drift from the frozen derivation is FAIL.

void gen_case(std::vector<RelationReport>& out, const std::string& id, const LieElement& engine,
              const LieElement& derived, const LieElement& printed, const std::string& note) {
  RelationReport r{"gen", id, "", false, note};
  if (!(engine == derived)) {
    r.status = "FAIL";
    r.unexpected = true;
    r.note = "engine value drifted from the frozen derivation; " + note;
  } else if (engine == printed) {
    r.status = "MATCH";
  } else {
    r.status = "EXPECTED-MISMATCH";
  }
  out.push_back(std::move(r));
}

void gen_leading(std::vector<RelationReport>& out, const std::string& id, const LieElement& engine,
                 int64_t k, int64_t l, const Scalar& want, const std::string& note) {
  Scalar got;
  bool clean = true;
  for (const auto& [kl, c] : engine.terms) {
    if (kl.first != k) continue;
    if (kl.second > l) clean = false;
    if (kl.second == l) got = c;
  }
  bool ok = clean && got == want;
  out.push_back({"gen", id, ok ? "MATCH" : "MISMATCH", !ok, note});
}

Rat binom(int64_t n, int64_t k) {
  Rat r(1);
  for (int64_t i = 1; i <= k; ++i) r = r * Rat(n - k + i) / Rat(i);
  return r;
}

void suite_gen(const VerifyOptions& o, std::vector<RelationReport>& out) {
  (void)o;
  auto W = [](int64_t k, int64_t l, int64_t num = 1, int64_t den = 1) {
    return lie_w(k, l, Scalar(Rat(num) / Rat(den)));
  };
  {
    LieElement engine = bracket(W(-2, 1) - W(-2, 0), W(1, 0));
    gen_case(out, "pair-ground", engine, W(-1, 0), W(-1, 0),
             "the calibrated down generator lowers w[1,0] onto w[-1,0]");
  }
  {
    LieElement engine = bracket(W(1, 0), W(0, 3));
    LieElement val = W(1, 2, -3) + W(1, 1, -3) + W(1, 0, -1);
    gen_case(out, "diag-raise", engine, val, val, "three-dot diagonal against the bare up shift");
  }
  for (int64_t b = 1; b <= 3; ++b) {
    LieElement engine = bracket(W(1, 2 * b), W(0, 3));
    gen_leading(out, "diag-raise-lead-b" + std::to_string(b), engine, 1, 2 * b + 2, Scalar(-3),
                "stated through the top dot term only; lower terms -3*w[1," +
                    std::to_string(2 * b + 1) + "] - w[1," + std::to_string(2 * b) + "] are unstated");
  }
  for (int64_t a = 0; a <= 3; ++a) {
    LieElement engine = bracket(W(2 * a, 1), W(1, 0));
    gen_case(out, "shear-raise-up-a" + std::to_string(a), engine, W(2 * a + 1, 0), W(2 * a + 1, 0),
             "dot-one column pushes the t-degree up by one");
    if (a >= 1) {
      LieElement eng2 = bracket(W(-2 * a, 1), W(1, 0));
      gen_case(out, "shear-raise-down-a" + std::to_string(a), eng2, W(1 - 2 * a, 0), W(1 - 2 * a, 0),
               "mirror of the dot-one push on negative t-degrees");
    }
  }
  for (int64_t a = 0; a <= 3; ++a) {
    LieElement engine = bracket(W(2 * a + 1, 0), W(1, 2) - W(1, 1));
    std::string sa = std::to_string(a);
    gen_leading(out, "double-shear-a" + sa + "-lead", engine, 2 * a + 2, 1,
                Scalar(Rat(-(4 * a + 2))), "stated top term -(4a+2)*w[2a+2,1]");
    LieElement printed = W(2 * a + 2, 1, -(4 * a + 2)) + W(2 * a + 2, 0, -(2 * a + 1) * (2 * a + 2));
    LieElement derived = W(2 * a + 2, 1, -(4 * a + 2)) + W(2 * a + 2, 0, -(2 * a) * (2 * a + 1));
    gen_case(out, "double-shear-a" + sa + "-full", engine, derived, printed,
             "stated subleading coefficient -(2a+1)(2a+2); the bracket gives -2a(2a+1)");
  }
  for (int64_t b = 1; b <= 3; ++b) {
    LieElement engine = bracket(W(-1, 0), W(1, 2 * b));
    LieElement printed;
    for (int64_t i = 0; i < 2 * b; ++i) {
      Rat c = binom(2 * b, i);
      if ((2 * b - i + 1) % 2 == 1) c = -c;
      printed.add_term(0, i, Scalar(c));
    }
    LieElement derived = printed + Scalar(-1) * lie_central();
    gen_case(out, "down-up-pair-b" + std::to_string(b), engine, derived, printed,
             "difference is exactly -1*C; the stated identity lives in the central quotient");
  }
  for (int64_t k = 1; k <= 3; ++k) {
    std::string sk = std::to_string(k);
    {
      LieElement engine = bracket(W(1, 0), W(-k, 0));
      LieElement val = (k == 1) ? lie_central() : LieElement{};
      gen_case(out, "fock-row1-k" + sk, engine, val, val,
               "the stated scalar is the central element, which acts as 1");
    }
    {
      LieElement engine = bracket(W(-2, 1) - W(-2, 0), W(-k, 0));
      LieElement printed = W(-(k + 2), 0, k + 2);
      LieElement derived = W(-(k + 2), 0, -k);
      gen_case(out, "fock-row2-k" + sk, engine, derived, printed,
               "stated action coefficient k+2; the bracket gives -k");
    }
    {
      LieElement engine = bracket(W(2, 1) + W(2, 0), W(-k, 0));
      LieElement printed = W(2 - k, 0, -(k + 2));
      LieElement derived = W(2 - k, 0, -k);
      if (k == 2) derived.add(lie_central(), Scalar(-1));
      gen_case(out, "fock-row3-k" + sk, engine, derived, printed,
               "stated action coefficient -(k+2); the bracket gives -k, with a central term at k = 2");
    }
    {
      LieElement engine = bracket(W(0, 3), W(-k, 0));
      LieElement printed = W(-k, 2, 3 * k) + W(-k, 1, -3 * k * k) + W(-k, 0, k * k * k);
      LieElement derived = Scalar(-1) * printed;
      gen_case(out, "fock-row4-k" + sk, engine, derived, printed,
               "the bracket is the exact negative of the stated action value");
    }
  }
}

// ---------------------------------------------------------------------------
// dims: the bigraded dimension series against direct counting.

void suite_dims(const VerifyOptions& o, std::vector<RelationReport>& out) {
  DimTable t = series_coefficients(o.dims_rank, o.dims_weight, +1);
  {
    int bad = 0;
    for (int64_t r = 0; r <= o.dims_rank; ++r)
      for (int64_t k = 0; k <= o.dims_weight; ++k)
        if (t[{r, k}] != multiset_generator_count(r, k)) ++bad;
    push(out, "dims", "series-vs-multisets", bad == 0,
         "grid rank <= " + std::to_string(o.dims_rank) + ", weight <= " + std::to_string(o.dims_weight));
  }
  {
    DimTable m = series_coefficients(o.dims_rank, o.dims_weight, -1);
    int bad = 0;
    for (int64_t r = 0; r <= o.dims_rank; ++r)
      for (int64_t k = 0; k <= o.dims_weight; ++k)
        if (m[{-r, k}] != t[{r, k}]) ++bad;
    push(out, "dims", "mirror-side", bad == 0, "the mirrored table repeats the positive side");
  }
  {
    bool ok = multiset_generator_count(1, 1) == 1 && multiset_generator_count(2, 1) == 0 &&
              multiset_generator_count(2, 2) == 1 && multiset_generator_count(3, 2) == 1 &&
              multiset_generator_count(4, 2) == 1 && multiset_generator_count(5, 3) == 2 &&
              multiset_generator_count(0, 0) == 1 && multiset_generator_count(0, 1) == 0;
    push(out, "dims", "frozen-cells", ok, "hand-counted corner values, including (4,2) = 1");
  }
  {
    int bad = 0;
    for (int64_t n = 0; n <= 30; ++n)
      if (odd_partition_count(n) != distinct_partition_count(n)) ++bad;
    bool ok = bad == 0 && odd_partition_count(10) == 10 && distinct_partition_count(10) == 10;
    push(out, "dims", "odd-vs-distinct", ok, "odd-part and distinct-part counts agree up to 30");
  }
}

// ---------------------------------------------------------------------------
// phi: the relation manifest plus the calibration and ledger invariants.

CheckOutcome run_row(const ManifestRow& row, const std::string& mode, int64_t bound,
                     const Ledger& lg, const PhiAssignment& as) {
  TraceExpr lhs = parse_trace(row.lhs);
  if (row.rhs.rfind("lie:", 0) == 0) {
    EnvElement L;
    try {
      L = phi_image(lhs, lg, as);
    } catch (const MissingNames& m) {
      CheckOutcome oc;
      oc.status = Status::NOT_EXPRESSIBLE;
      std::string names;
      for (const auto& n : m.names) names += (names.empty() ? "" : ", ") + n;
      oc.note = "undefined names: " + names;
      return oc;
    }
    EnvElement R = quotient_reduce(env_from_lie(parse_lie(row.rhs.substr(4))));
    return check_env_images(std::move(L), std::move(R), mode, row.compare, bound);
  }
  return check_relation(lhs, parse_trace(row.rhs), mode, row.compare, bound, lg, as);
}

void suite_phi(const VerifyOptions& o, std::vector<RelationReport>& out) {
  const Ledger& lg = shipped_ledger();
  PhiAssignment as = calibrated_assignment();
  std::vector<ManifestRow> rows =
      parse_manifest(o.manifest.empty() ? std::string(embedded_manifest()) : o.manifest);
  for (const ManifestRow& row : rows) {
    std::vector<std::string> modes;
    if (row.mode == "both")
      modes = {"pbw", "fock"};
    else
      modes = {row.mode};
    for (const std::string& mode : modes) {
      RelationReport rep{"phi", row.id + "." + mode, "", false, ""};
      try {
        CheckOutcome oc = run_row(row, mode, row.bound > 0 ? row.bound : o.fock_bound, lg, as);
        std::string actual = status_name(oc.status);
        rep.note = oc.note;
        if (actual == row.expect) {
          rep.status = (actual == "MISMATCH") ? "EXPECTED-MISMATCH" : actual;
        } else {
          rep.status = actual;
          rep.unexpected = true;
          rep.note += (rep.note.empty() ? "" : "; ") + ("expected " + row.expect);
        }
      } catch (const std::exception& e) {
        rep.status = "FAIL";
        rep.unexpected = true;
        rep.note = std::string("error: ") + e.what();
      }
      out.push_back(std::move(rep));
    }
  }
  {
    static const char* kExpected[] = {"h[-1]", "h[1]",  "h[3]",  "h[5]",  "h[-3]", "h[-5]", "dbar0",
                                      "d0",    "d2",    "dbar2", "dbar4", "h1x2",  "h-1x2"};
    static const char* kAbsent[] = {"d1", "d3", "d5", "dbar1", "dbar3", "dbar5"};
    bool ok = lg.entries().size() == std::size(kExpected);
    for (const char* n : kExpected) ok = ok && lg.has(n);
    for (const char* n : kAbsent) ok = ok && !lg.has(n);
    push(out, "phi", "ledger-names", ok,
         "exactly the even-dot bubbles and odd cycles are defined; no odd-dot bubble names");
  }
  {
    RelationReport rep{"phi", "calibration-fixed", "OK", false, ""};
    try {
      CalibrationReport cr = calibrate_phi();
      bool same = cr.assignment.a1 == as.a1 && cr.assignment.a2 == as.a2 &&
                  cr.assignment.a3 == as.a3 && cr.assignment.a4 == as.a4;
      if (!cr.consistent || !same) {
        rep.status = "FAIL";
        rep.unexpected = true;
        rep.note = cr.consistent ? "recalibration drifted from the shipped assignment"
                                 : "core relation set inconsistent at the shipped assignment";
      } else {
        rep.note = "a1 = " + render(as.a1) + ", a2 = " + render(as.a2) + ", a3 = " + render(as.a3) +
                   ", a4 = " + render(as.a4) + " (a4 pinned, unconstrained by the core set)";
      }
    } catch (const std::exception& e) {
      rep.status = "FAIL";
      rep.unexpected = true;
      rep.note = std::string("error: ") + e.what();
    }
    out.push_back(std::move(rep));
  }
}

}  // namespace

std::vector<ManifestRow> parse_manifest(const std::string& text) {
  std::vector<ManifestRow> rows;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t ns = line.find_first_not_of(" \t");
    if (ns == std::string::npos) continue;
    if (line[ns] == '#') continue;
    if (!header) {
      if (line.substr(ns) != "wm-phi-manifest v1")
        throw std::runtime_error("manifest: expected header 'wm-phi-manifest v1'");
      header = true;
      continue;
    }
    std::vector<std::string> f;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        f.push_back(line.substr(pos));
        break;
      }
      f.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (f.size() < 7)
      throw std::runtime_error("manifest: row '" + f[0] + "' has fewer than 7 tab-separated fields");
    ManifestRow r;
    r.id = f[0];
    r.mode = f[1];
    r.compare = f[2];
    r.expect = f[3];
    r.bound = (f[4] == "-") ? 0 : std::stoll(f[4]);
    r.lhs = f[5];
    r.rhs = f[6];
    if (f.size() > 7) r.note = f[7];
    if (r.id.empty()) throw std::runtime_error("manifest: empty id");
    if (!seen.insert(r.id).second) throw std::runtime_error("manifest: duplicate id '" + r.id + "'");
    if (r.mode != "pbw" && r.mode != "fock" && r.mode != "both")
      throw std::runtime_error("manifest: row '" + r.id + "' has unknown mode '" + r.mode + "'");
    if (r.compare != "exact" && r.compare != "leading")
      throw std::runtime_error("manifest: row '" + r.id + "' has unknown compare '" + r.compare + "'");
    if (r.expect != "MATCH" && r.expect != "MISMATCH" && r.expect != "NOT-EXPRESSIBLE")
      throw std::runtime_error("manifest: row '" + r.id + "' has unknown expect '" + r.expect + "'");
    rows.push_back(std::move(r));
  }
  if (!header) throw std::runtime_error("manifest: empty input");
  return rows;
}

VerifyResult run_suite(const std::string& suite, const VerifyOptions& opt) {
  static const std::vector<std::string> kOrder = {"lie", "pbw", "fock", "heis", "gen", "dims", "phi"};
  std::vector<std::string> todo;
  if (suite == "all")
    todo = kOrder;
  else if (std::find(kOrder.begin(), kOrder.end(), suite) != kOrder.end())
    todo = {suite};
  else
    throw std::invalid_argument("unknown suite '" + suite + "'");

  VerifyResult res;
  for (const std::string& s : todo) {
    std::vector<RelationReport> reports;
    if (s == "lie") suite_lie(opt, reports);
    if (s == "pbw") suite_pbw(opt, reports);
    if (s == "fock") suite_fock(opt, reports);
    if (s == "heis") suite_heis(opt, reports);
    if (s == "gen") suite_gen(opt, reports);
    if (s == "dims") suite_dims(opt, reports);
    if (s == "phi") suite_phi(opt, reports);
    std::sort(reports.begin(), reports.end(),
              [](const RelationReport& a, const RelationReport& b) { return a.id < b.id; });
    for (auto& r : reports) res.reports.push_back(std::move(r));
  }
  for (const auto& r : res.reports)
    if (r.unexpected) ++res.unexpected;
  return res;
}

void render_text(std::ostream& os, const VerifyResult& res) {
  size_t ws = 5, wi = 2, wst = 6;
  for (const auto& r : res.reports) {
    ws = std::max(ws, r.suite.size());
    wi = std::max(wi, r.id.size());
    wst = std::max(wst, r.status.size() + (r.unexpected ? 12 : 0));
  }
  auto pad = [](const std::string& s, size_t w) { return s + std::string(w - s.size(), ' '); };
  os << pad("suite", ws) << "  " << pad("id", wi) << "  " << pad("status", wst) << "  note\n";
  for (const auto& r : res.reports) {
    std::string st = r.status + (r.unexpected ? " !unexpected" : "");
    os << pad(r.suite, ws) << "  " << pad(r.id, wi) << "  " << pad(st, wst) << "  " << r.note << "\n";
  }
  os << "summary: " << res.reports.size() << " checks, " << res.unexpected << " unexpected\n";
}

void render_machine(std::ostream& os, const VerifyResult& res) {
  for (const auto& r : res.reports)
    os << "check." << r.suite << "." << r.id << "\t" << r.status
       << (r.unexpected ? "\tunexpected" : "") << "\n";
  os << "summary.checks\t" << res.reports.size() << "\n";
  os << "summary.unexpected\t" << res.unexpected << "\n";
}

}  // namespace wminus
