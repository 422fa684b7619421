#pragma once

#include <vector>

#include "toddzeta/bseq.hpp"
#include "toddzeta/rational.hpp"

namespace toddzeta::contfrac {

using exactmath::Int;
using exactmath::Rat;

// Negative-regular (ceiling) continued fraction
//     q/p = b_1 - 1/(b_2 - 1/(... - 1/b_{r-1})),   written [b_1, ..., b_{r-1}].
// For coprime 0 < p < q every entry is >= 2; the degenerate expansion of
// q = p = 1 is [1].
struct Ncf {
  std::vector<Int> entries;
};

// Greedy ceiling expansion of q/p. Preconditions: 0 < p <= q, gcd(p, q) = 1.
// Throws std::domain_error on violations.
Ncf ncf_expand(const Int& q, const Int& p);

// Exact value of [b_1, ..., b_k]; throws std::domain_error on an empty list
// or a zero intermediate denominator.
Rat ncf_eval(const std::vector<Int>& entries);

// Convergents h_i/k_i = [b_1, ..., b_{i-1}] of a negative-regular expansion:
//     h_0 = 0, k_0 = -1,  h_1 = 1, k_1 = 0,
//     h_{i+1} = b_i h_i - h_{i-1},  k_{i+1} = b_i k_i - k_{i-1}.
// For entries = ncf_expand(q, p) the table has r+1 rows, r = entries+1 rows
// counted as indices 0..r, and (h_r, k_r) = (q, p).
struct ConvergentTable {
  std::vector<Int> h;
  std::vector<Int> k;
  int r() const { return static_cast<int>(h.size()) - 1; }
};

ConvergentTable convergents(const std::vector<Int>& entries);

// Minimal integer quadratic A w^2 + B w + C = 0 (A > 0) satisfied by the
// purely periodic fixed point w_0 = [[b_0, b_1, ...]] of a BSeq, together
// with the discriminant D = B^2 - 4AC > 0. With q/p = [b_1, ..., b_{r-1}]
// (q = 1, p = 0 when r = 1) and p' the numerator of [b_1, ..., b_{r-2}]:
//     A = q,  B = -b_0 q + p - p',  C = b_0 p' + (1 - p p')/q.
struct FixedPointQuadratic {
  Int a;
  Int b;
  Int c;
  Int disc;
};

FixedPointQuadratic periodic_fixed_point(const BSeq& b);

// The (q, p, p') data of a BSeq used throughout the quadratic-field layer.
struct PqData {
  Int q;        // numerator of [b_1, ..., b_{r-1}]
  Int p;        // denominator of the same; p p' == 1 (mod q)
  Int p_prime;  // numerator of [b_1, ..., b_{r-2}]
};

PqData pq_data(const BSeq& b);

}  // namespace toddzeta::contfrac
