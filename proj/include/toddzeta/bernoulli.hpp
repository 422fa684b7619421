#pragma once

#include <vector>

#include "toddzeta/rational.hpp"

namespace toddzeta::exactmath {

// Bernoulli numbers B_m under the convention B_1 = -1/2, i.e. the numbers
// generated by t/(e^t - 1) = sum B_m t^m / m!.
Rat bernoulli_number(int m);

// lambda_m = (-1)^m B_m / m!, the Taylor coefficients of
// g(h) = h / (1 - e^{-h}) = sum lambda_m h^m.
// lambda_0 = 1, lambda_1 = 1/2, lambda_2 = 1/12, lambda_m = 0 for odd m > 1.
Rat lambda_coeff(int m);

// Coefficients of the Bernoulli polynomial Ber_m(x), ascending in x, from the
// generating function t e^{xt}/(e^t - 1) = sum Ber_m(x) t^m / m!.
std::vector<Rat> bernoulli_poly(int m);

// Ber_m evaluated at an exact rational point.
Rat bernoulli_poly_at(int m, const Rat& x);

// The periodized value BerHat_m(x) for x in (0, 1]: equal to Ber_m(x) on
// (0, 1) and to the two-sided average (Ber_m(1) + Ber_m(0))/2 = B_m + [m==1]/2
// at x == 1. Throws std::domain_error for x outside (0, 1].
Rat ber_hat(int m, const Rat& x);

// Shared cache behind the free functions; usable standalone when a local
// (unsynchronized) table is preferable.
class BernoulliTable {
 public:
  explicit BernoulliTable(int initial_max = 16);
  // Values are returned by copy: the backing vectors may reallocate when a
  // later call grows the table.
  Rat number(int m);
  Rat lambda(int m);
  std::vector<Rat> poly(int m);
  Rat poly_at(int m, const Rat& x);

 private:
  void ensure(int m);
  std::vector<Rat> numbers_;
  std::vector<std::vector<Rat>> polys_;
};

}  // namespace toddzeta::exactmath
