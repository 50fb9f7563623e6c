#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wminus/env.hpp"
#include "wminus/lie.hpp"

namespace wminus {

// Integer partition, weakly decreasing positive parts; the empty vector is the
// vacuum.  Basis of the charge-zero Fock space via Maya coordinates
// S(lambda) = {lambda_i - i : i >= 1}.
using Partition = std::vector<int64_t>;

int64_t weight(const Partition& p);

struct FockVector {
  std::map<Partition, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const Partition& p, const Scalar& s);
  void add(const FockVector& o, const Scalar& scale = Scalar(1));

  friend FockVector operator+(FockVector x, const FockVector& y) { x.add(y); return x; }
  friend FockVector operator-(FockVector x, const FockVector& y) { x.add(y, Scalar(-1)); return x; }
  friend FockVector operator*(const Scalar& s, FockVector x);
  friend bool operator==(const FockVector& x, const FockVector& y) { return x.terms == y.terms; }
};

FockVector fock_basis(Partition p);

// t^k f(D) acting on |p>.  For k != 0 each occupied site j with j - k free
// hops there, picking up f(-j) and the sign (-1)^(occupied sites strictly
// between).  For k = 0 the operator is diagonal with the regularized eigenvalue
//   sum_{j in S, j >= 1} f(-j)  -  sum_{j <= 0, j not in S} f(-j),
// which gives every w_{0,l}, l >= 1, vacuum eigenvalue zero and makes the
// commutator test against the 2-cocycle come out exactly (w_{0,0} acts as -1).
FockVector act_basis_lie(int64_t k, const DPoly& f, const Partition& p);

// Linear extension; C acts as 1 (level one).
FockVector act_lie(const LieElement& x, const FockVector& v);

// PBW words act factor by factor, rightmost factor first.
FockVector act_env(const EnvElement& a, const FockVector& v);

std::vector<Partition> partitions_of(int64_t n);
std::vector<Partition> partitions_up_to(int64_t n);  // sizes 0..n, weight-then-lex order

// Canonical text form: "1*[2,1] + -1*[1,1,1]", vacuum term "[ ]" renders "[]".
std::string render(const FockVector& v);
std::string render(const Partition& p);

}  // namespace wminus
