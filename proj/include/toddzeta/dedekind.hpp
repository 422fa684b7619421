#pragma once

#include <vector>

#include "toddzeta/rational.hpp"

namespace toddzeta::dedekind {

using exactmath::Int;
using exactmath::Rat;

enum class ToddMethod { cf, ppd };

// Generalized Dedekind sum
//   s_{i,j}(p, q) = (1/(i! j!)) sum_{a=1}^{q} BerHat_i(<a/q>) BerHat_j(<-a p/q>)
// with <.> the (0, 1] bracket. Requires q >= 1 (q <= 0 rejected with a
// domain error; the sum is periodic in p mod q, any integer p is accepted)
// and gcd(p, q) = 1. O(q) exact evaluation.
Rat dedekind_direct(int i, int j, const Int& p, const Int& q);

// f_{i,j}(p, q): coefficient of x^i y^j in the Todd series t_(p,q).
Rat f_coeff(int i, int j, const Int& p, const Int& q,
            ToddMethod method = ToddMethod::cf);

// Todd-series bridge, O(length of the continued fraction):
//   s_{i,j}(p, q) = (-1)^i q^{1-i-j} (f_{i,j}(p, q) - corr_{i,j}(q)),
// where corr = q^{i+j-1} (-1)^{i+j} B_i B_j / (i! j!) when i == 1 or j == 1
// and 0 otherwise. Requires i, j >= 1.
Rat dedekind_via_todd(int i, int j, const Int& p, const Int& q);

// The correction term above.
Rat bridge_correction(int i, int j, const Int& q);

// Classical Dedekind sum s(p, q) = s_{1,1}(-p, q).
Rat classical_dedekind(const Int& p, const Int& q);

// Integerized per-q tables of BerHat_i(<a/q>) for sweeping many (i, j, p) at
// a fixed q: value(i, a) = BerHat_i(a/q) * q^i * den_i is an integer
// (den_i clears the Bernoulli polynomial denominators), so each sum is a
// pure integer inner product finished by one exact division.
class DedekindTable {
 public:
  DedekindTable(const Int& q, int max_order);
  Rat sum(int i, int j, const Int& p) const;
  const Int& q() const { return q_; }

 private:
  Int q_;
  int max_order_;
  std::vector<Int> den_;                  // den_[i]
  std::vector<std::vector<Int>> values_;  // values_[i][a-1], a = 1..q
};

}  // namespace toddzeta::dedekind
