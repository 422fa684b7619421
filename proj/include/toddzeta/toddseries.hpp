#pragma once

#include <complex>
#include <string>
#include <vector>

#include "toddzeta/biseries.hpp"
#include "toddzeta/rational.hpp"

namespace toddzeta::toddseries {

using exactmath::BiSeries;
using exactmath::Int;
using exactmath::Rat;

// Todd power series t_sigma(x, y) of the 2-dimensional cone of type (p, q),
// truncated at a total degree. As a generating function,
//     t_sigma = q x y * sum over the dual cone's lattice points of
//               e^{-<m, rho_1> x - <m, rho_2> y},
// a power series with constant term 1 and degree-1 part (x + y)/2.
struct ToddSeries {
  Int p;
  Int q;
  int degree;
  BiSeries series;
};

// Homogeneous polynomial of degree `degree` in two formal variables;
// c[k] is the coefficient of X^(degree-k) Y^k. Used both for the P_d / R_d
// building blocks and for polynomials in (d/dx, d/dy).
struct HomoPoly {
  int degree = 0;
  std::vector<Rat> c;
};

// P_d(X, Y) = eps_d * sum_{i+j=d, i,j>0} lambda_i lambda_j X^{i-1} Y^{j-1},
// eps_2 = -1 and eps_d = 1 for even d > 2. Homogeneous of degree d - 2.
HomoPoly make_P(int d);

// R_d(X, Y) = X^{d-2} - X^{d-3} Y + ... + Y^{d-2} (R_2 = 1).
HomoPoly make_R(int d);

// Nonsingular cone: t = g(x) g(y) with g(z) = z/(1 - e^{-z}).
ToddSeries todd_nonsingular(int max_total_degree);

// Exact parallelepiped route:
//     t_(p,q) = (1/q) g(qx) g(qy) sum_{k=0}^{q-1} e^{-k x - (k p mod q) y}.
// This is the designated ground-truth oracle. Preconditions: q >= 1,
// 0 <= p < q, gcd(p, q) = 1.
ToddSeries todd_ppd(const Int& p, const Int& q, int max_total_degree);

// Closed form by continued fractions. With q/p = [b_1, ..., b_{r-1}],
// convergents (h_i, k_i) and linear forms X_i = -h_i x + (q k_i - p h_i) y:
// even degree d:
//     q x y sum_{i=1}^r P_d(X_{i-1}, X_i)
//   + lambda_d q x y sum_{i=1}^{r-1} b_i R_d(X_{i-1}, X_{i+1})
//   - lambda_d (x X_1^{d-1} + y X_{r-1}^{d-1}) + (1/2) [d==2] q x y;
// odd degree d: (1/2) lambda_{d-1} q^{d-1} x y (x^{d-2} + y^{d-2}).
// Cost is linear in the expansion length, so log-ish in q for typical p.
ToddSeries todd_cf(const Int& p, const Int& q, int max_total_degree);

// Per-degree part of todd_cf: homogeneous coefficients (index = x-exponent
// descending is NOT used here; c[k] = coeff of x^{d-k} y^k). Cheap entry
// point for single-coefficient consumers.
std::vector<Rat> todd_cf_degree_part(const Int& p, const Int& q, int d);

// Floating-point check via the cyclotomic identity
//     t_(p,q) = sum_{w^q = 1} x y / ((1 - w^{-p} e^{-x}) (1 - w e^{-y})).
// Coefficients are returned as doubles; max_imag_abs reports how far the
// summed imaginary parts are from 0 (they vanish in exact arithmetic).
struct CyclotomicTodd {
  Int p;
  Int q;
  int degree;
  std::vector<double> coeff;  // triangular, row-major by (i, j), i+j <= degree
  double max_imag_abs = 0.0;
  double coeff_at(int i, int j) const;
};

CyclotomicTodd todd_cyclotomic(const Int& p, const Int& q,
                               int max_total_degree);

// Laurent series s_sigma = t_sigma / (q x y), valuation (-1, -1).
BiSeries s_series(const ToddSeries& t);

struct IdentityReport {
  bool ok = true;
  std::string detail;  // first mismatching coefficient when !ok
};

// Two-cone reciprocity: for coprime p, q > 0,
//   s_(p,q)(x - (p/q) y, y/q) + s_(q,p)(y - (q/p) x, x/p) = s_(0,1)(x, y).
// Verified exactly through total degree D of the s-identity by clearing the
// linear-form denominators (the cleared identity is checked through D + 2).
IdentityReport check_reciprocity(const Int& p, const Int& q, int degree);

// Even/odd split: t_sigma(x, y) - (1/2) g(qx) y - (1/2) g(qy) x
//                 = t_sigma^even(x, y) - q x y / 2, through the degree.
IdentityReport check_even_odd_identity(const Int& p, const Int& q, int degree);

}  // namespace toddzeta::toddseries
