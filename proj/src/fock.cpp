#include "wminus/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace wminus {

int64_t weight(const Partition& p) {
  int64_t w = 0;
  for (auto x : p) w += x;
  return w;
}

void FockVector::add_term(const Partition& p, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = terms.find(p);
  if (it == terms.end()) {
    terms.emplace(p, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void FockVector::add(const FockVector& o, const Scalar& scale) {
  for (const auto& [p, v] : o.terms) add_term(p, v * scale);
}

FockVector operator*(const Scalar& s, FockVector x) {
  if (s.is_zero()) return FockVector{};
  for (auto& [p, v] : x.terms) v *= s;
  return x;
}

FockVector fock_basis(Partition p) {
  FockVector v;
  v.add_term(std::move(p), Scalar(1));
  return v;
}

namespace {

// Occupancy of the Maya diagram: explicit sites lambda_i - i (strictly
// decreasing), every site <= -(len+1) occupied.
struct Maya {
  std::vector<int64_t> sites;  // descending
  int64_t tail;                // all j <= tail are occupied

  explicit Maya(const Partition& p) {
    sites.reserve(p.size());
    for (size_t i = 0; i < p.size(); ++i)
      sites.push_back(p[i] - static_cast<int64_t>(i) - 1);
    tail = -static_cast<int64_t>(p.size()) - 1;
  }

  bool occupied(int64_t j) const {
    if (j <= tail) return true;
    return std::binary_search(sites.rbegin(), sites.rend(), j);
  }
};

// sites: all occupied positions above some floor, everything below occupied.
Partition partition_from_sites(std::vector<int64_t> sites) {
  std::sort(sites.begin(), sites.end(), std::greater<>());
  Partition p;
  for (size_t i = 0; i < sites.size(); ++i) {
    int64_t part = sites[i] + static_cast<int64_t>(i) + 1;
    if (part < 0) throw std::logic_error("partition_from_sites: negative part");
    p.push_back(part);
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) throw std::logic_error("partition_from_sites: not sorted");
  return p;
}

}  // namespace

FockVector act_basis_lie(int64_t k, const DPoly& f, const Partition& p) {
  FockVector out;
  if (f.is_zero()) return out;
  Maya maya(p);
  int64_t n = static_cast<int64_t>(p.size());

  if (k == 0) {
    Scalar eig(0);
    for (int64_t s : maya.sites)
      if (s >= 1) eig += f.eval(Rat(-s));
    for (int64_t j = maya.tail + 1; j <= 0; ++j)
      if (!maya.occupied(j)) eig -= f.eval(Rat(-j));
    out.add_term(p, eig);
    return out;
  }

  int64_t kk = k > 0 ? k : -k;
  int64_t lo = -(n + kk + 1);
  int64_t hi = p.empty() ? -1 : p[0] - 1;
  // Deeper sources have occupied targets in both directions; see Maya::tail.
  std::vector<int64_t> base;  // occupied sites above lo, descending
  for (int64_t s : maya.sites) base.push_back(s);
  for (int64_t j = maya.tail; j > lo; --j) base.push_back(j);

  (void)hi;
  for (int64_t j : base) {
    int64_t target = j - k;
    if (maya.occupied(target)) continue;
    // sign: occupied sites strictly between source and target
    int64_t a = std::min(j, target), b = std::max(j, target);
    int parity = 0;
    for (int64_t m = a + 1; m < b; ++m)
      if (maya.occupied(m)) parity ^= 1;
    Scalar coeff = f.eval(Rat(-j));
    if (parity) coeff = -coeff;
    if (coeff.is_zero()) continue;

    std::vector<int64_t> sites;
    sites.reserve(base.size() + 1);
    for (int64_t s : base)
      if (s != j) sites.push_back(s);
    if (target > lo) sites.push_back(target);
    else throw std::logic_error("act_basis_lie: hop below window");
    out.add_term(partition_from_sites(std::move(sites)), coeff);
  }
  return out;
}

FockVector act_lie(const LieElement& x, const FockVector& v) {
  FockVector out;
  auto comps = x.components();
  for (const auto& [p, coeff] : v.terms) {
    for (const auto& [k, f] : comps) out.add(act_basis_lie(k, f, p), coeff);
    if (!x.cC.is_zero()) out.add_term(p, coeff * x.cC);  // level one
  }
  return out;
}

FockVector act_env(const EnvElement& a, const FockVector& v) {
  FockVector out;
  for (const auto& [w, coeff] : a.terms) {
    FockVector cur = v;
    for (size_t i = w.size(); i-- > 0 && !cur.is_zero();) {
      const EnvGen& g = w[i];
      if (g.kind == EnvGen::C) continue;  // acts as 1
      DPoly f = (g.kind == EnvGen::W00) ? DPoly::monomial(0)
                                        : DPoly::monomial(g.l).shifted(Rat(g.j) / 2);
      int64_t k = (g.kind == EnvGen::W00) ? 0 : g.j;
      FockVector next;
      for (const auto& [p, c] : cur.terms) next.add(act_basis_lie(k, f, p), c);
      cur = std::move(next);
    }
    out.add(cur, coeff);
  }
  return out;
}

namespace {
void gen_partitions(int64_t n, int64_t maxpart, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int64_t part = std::min(n, maxpart); part >= 1; --part) {
    cur.push_back(part);
    gen_partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int64_t n) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int64_t n) {
  std::vector<Partition> out;
  for (int64_t m = 0; m <= n; ++m) {
    auto pm = partitions_of(m);
    out.insert(out.end(), pm.begin(), pm.end());
  }
  return out;
}

std::string render(const Partition& p) {
  std::string out = "[";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

std::string render(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::vector<const std::pair<const Partition, Scalar>*> order;
  for (const auto& t : v.terms) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
    int64_t wx = weight(x->first), wy = weight(y->first);
    if (wx != wy) return wx < wy;
    return y->first < x->first;
  });
  std::string out;
  for (auto* t : order) {
    if (!out.empty()) out += " + ";
    out += render_coeff(t->second) + "*" + render(t->first);
  }
  return out;
}

}  // namespace wminus
