#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toddzeta/rational.hpp"

namespace toddzeta::exactmath {

// Truncated bivariate series with exact rational coefficients and an optional
// Laurent offset. A BiSeries stores all coefficients of
//     x^(vx + a) * y^(vy + b)   for a, b >= 0, a + b <= max_total_degree,
// where (vx, vy) is the valuation, restricted to vx, vy >= -1 (exactly enough
// for the s-series t/(q x y)). Arithmetic never fabricates coefficients
// beyond the truncation window: products take the min of the operand windows,
// sums take the min of the absolute truncation degrees.
class BiSeries {
 public:
  BiSeries();
  static BiSeries zero(int max_total_degree);
  static BiSeries constant(int max_total_degree, const Rat& c);
  // Monomial c * x^i y^j with absolute exponents (i, j >= -1 allowed).
  static BiSeries monomial(int max_total_degree, int i, int j, const Rat& c);

  int max_total_degree() const { return deg_; }
  std::pair<int, int> valuation() const { return {vx_, vy_}; }
  bool is_power_series() const { return vx_ == 0 && vy_ == 0; }
  // Highest absolute total degree covered by the truncation window.
  int abs_truncation_degree() const { return vx_ + vy_ + deg_; }

  // Coefficient of x^i y^j (absolute exponents). Exponents below the
  // valuation return 0; reads beyond the truncation window throw
  // std::out_of_range.
  const Rat& coeff(int i, int j) const;
  void set_coeff(int i, int j, const Rat& c);
  void add_to_coeff(int i, int j, const Rat& c);

  BiSeries operator+(const BiSeries& o) const;
  BiSeries operator-(const BiSeries& o) const;
  BiSeries operator*(const BiSeries& o) const;
  BiSeries operator-() const;
  BiSeries& operator+=(const BiSeries& o) { return *this = *this + o; }
  BiSeries& operator-=(const BiSeries& o) { return *this = *this - o; }
  BiSeries& operator*=(const BiSeries& o) { return *this = *this * o; }

  BiSeries scaled(const Rat& c) const;

  // Multiplies by x^dx y^dy by shifting the valuation; throws
  // std::domain_error if the result would fall below valuation (-1, -1).
  BiSeries shifted(int dx, int dy) const;

  // (x, y) <- (m00 x + m01 y, m10 x + m11 y). Power series only; exact on
  // every homogeneous part through the truncation degree.
  BiSeries substitute_linear(const Rat& m00, const Rat& m01, const Rat& m10,
                             const Rat& m11) const;

  // exp of a power series with zero constant term.
  BiSeries exp() const;

  // Multiplicative inverse of a power series with nonzero constant term
  // (covers the 1/(1 - e^{-z}) style kernels after factoring out z).
  BiSeries inverse() const;

  BiSeries truncated(int new_max_total_degree) const;
  // Terms of absolute total degree d, as a series with the same window.
  BiSeries homogeneous_part(int d) const;

  bool is_zero() const;
  // Structural equality on the common truncation window after aligning
  // valuations (coefficients below a valuation count as 0).
  bool operator==(const BiSeries& o) const;
  bool operator!=(const BiSeries& o) const { return !(*this == o); }

  // Text format: terms sorted by total degree, then x-exponent descending;
  // e.g. "1 + 1/2*x + 1/2*y + 1/4*x*y". Laurent exponents print as x^-1.
  std::string str() const;

  // All nonzero coefficients as (i, j, value) with absolute exponents, in
  // the same deterministic order as str().
  std::vector<std::pair<std::pair<int, int>, Rat>> terms() const;

 private:
  BiSeries(int deg, int vx, int vy);
  int index(int a, int b) const { return (a + b) * (a + b + 1) / 2 + b; }
  int deg_;
  int vx_, vy_;
  std::vector<Rat> c_;  // triangular, indexed by relative exponents
};

// e^(alpha x + beta y) truncated at total degree max_total_degree.
BiSeries exp_linear_form(const Rat& alpha, const Rat& beta,
                         int max_total_degree);

// g(s z) = s z / (1 - e^{-s z}) = sum lambda_m s^m z^m as a series in x
// (var == 0) or y (var == 1).
BiSeries g_series(int var, const Int& scale, int max_total_degree);

}  // namespace toddzeta::exactmath
