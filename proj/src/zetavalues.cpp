#include "toddzeta/zetavalues.hpp"

#include <stdexcept>
#include <vector>

#include "toddzeta/bernoulli.hpp"

namespace toddzeta::zetavalues {

using exactmath::binomial;
using exactmath::factorial;
using exactmath::lambda_coeff;
using exactmath::rat_pow;
using toddseries::make_P;
using toddseries::make_R;

namespace {

// Coefficient vector of Q^m, indexed by the y-exponent (length 2m + 1).
std::vector<Rat> form_power(const QuadForm& q, int m) {
  std::vector<Rat> cur{Rat(1)};
  for (int t = 0; t < m; ++t) {
    std::vector<Rat> next(cur.size() + 2, Rat(0));
    for (std::size_t s = 0; s < cur.size(); ++s) {
      if (cur[s] == 0) continue;
      next[s] += cur[s] * q.a;
      next[s + 1] += cur[s] * q.b;
      next[s + 2] += cur[s] * q.c;
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Rat gaussian_partial(int i, int j, const QuadForm& q) {
  if (i < 0 || j < 0)
    throw std::domain_error("gaussian_partial: need i, j >= 0");
  if ((i + j) % 2 != 0) return Rat(0);
  int m = (i + j) / 2;
  std::vector<Rat> pw = form_power(q, m);
  Rat coeff = pw[static_cast<std::size_t>(j)];
  if (coeff == 0) return Rat(0);
  Rat sign(m % 2 == 0 ? 1 : -1);
  Int ff = factorial(i) * factorial(j);
  return sign * Rat(ff) * coeff / Rat(factorial(m));
}

Rat gaussian_partial_closed(int i, int j, const QuadForm& q) {
  if (i < 0 || j < 0)
    throw std::domain_error("gaussian_partial_closed: need i, j >= 0");
  if ((i + j) % 2 != 0) return Rat(0);
  int m = (i + j) / 2;
  Rat sign(m % 2 == 0 ? 1 : -1);
  Int ff = factorial(i) * factorial(j);
  Rat total(0);
  for (int i2 = i % 2; i2 <= std::min(i, j); i2 += 2) {
    int alpha = (i - i2) / 2;
    int gamma = (j - i2) / 2;
    Int denom = factorial(alpha) * factorial(i2) * factorial(gamma);
    total += rat_pow(q.a, alpha) * rat_pow(q.b, i2) * rat_pow(q.c, gamma) /
             Rat(denom);
  }
  return sign * Rat(ff) * total;
}

Rat gaussian_halfline(int n, const QuadForm& q) {
  if (n < 1) throw std::domain_error("gaussian_halfline: need n >= 1");
  if (q.c <= 0) throw std::domain_error("gaussian_halfline: need c > 0");
  Rat total(0);
  for (int r = 0; r < n; ++r) {
    Rat sign(r % 2 == 0 ? 1 : -1);
    Int denom = factorial(r) * factorial(2 * n - 1 - 2 * r);
    total += sign * Rat(factorial(n - 1 - r)) * rat_pow(q.a, r) *
             rat_pow(q.b, 2 * n - 1 - 2 * r) * rat_pow(q.c, r) / Rat(denom);
  }
  return -Rat(factorial(2 * n - 1)) * total / (2 * rat_pow(q.c, n));
}

Rat apply_to_gaussian(const HomoPoly& p, const QuadForm& q) {
  Rat total(0);
  for (int k = 0; k <= p.degree; ++k) {
    const Rat& c = p.c[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    total += c * gaussian_partial(p.degree - k, k, q);
  }
  return total;
}

Rat zeta_field(const BSeq& b, int n) {
  if (n < 0) throw std::domain_error("zeta_field: need n >= 0");
  quadfield::QuadFieldData d = quadfield::build_quadfield(b);
  HomoPoly P = make_P(2 * n + 2);
  HomoPoly R = make_R(2 * n + 2);
  Rat lam = lambda_coeff(2 * n + 2);
  Rat total(0);
  for (long i = 1; i <= b.r(); ++i)
    total += apply_to_gaussian(P, quadfield::q_form_pair(d, i - 1, i));
  for (long i = 1; i <= b.r(); ++i)
    total += lam * Rat(b.at(i)) *
             apply_to_gaussian(R, quadfield::q_form_pair(d, i - 1, i + 1));
  Rat sign(n % 2 == 0 ? 1 : -1);
  return sign * Rat(factorial(n)) * total;
}

Rat zeta_zero(const BSeq& b) {
  Rat total(0);
  for (long i = 0; i < b.r(); ++i) total += Rat(b.at(i)) - 3;
  return total / 12;
}

Rat zeta_general(const Cone2D& tau, const QuadForm& q, int n,
                 ToddMethod method) {
  if (n < 0) throw std::domain_error("zeta_general: need n >= 0");
  if (!quadform_positive_on_cone(q, tau))
    throw std::domain_error("zeta_general: form not positive on the cone");
  QuadForm qt = compose_on_rays(q, tau.ray1, tau.ray2);
  Int mult = cone2d::multiplicity(tau);
  cone2d::ConeType st = cone2d::classify(cone2d::dual_cone(tau));
  int d = 2 * n + 2;
  std::vector<Rat> part;
  if (method == ToddMethod::cf) {
    part = toddseries::todd_cf_degree_part(st.p, st.q, d);
  } else {
    toddseries::ToddSeries t = toddseries::todd_ppd(st.p, st.q, d);
    part.resize(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
      part[static_cast<std::size_t>(k)] = t.series.coeff(d - k, k);
  }
  Rat qpow = rat_pow(Rat(mult), -(2 * n + 1));
  Rat total(0);
  for (int k = 0; k <= d; ++k) {
    const Rat& c = part[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    int i = d - k;
    if (i >= 1 && k >= 1)
      total += c * qpow * gaussian_partial(i - 1, k - 1, qt);
    else if (k == 0)
      total -= c * qpow * gaussian_halfline(n + 1, qt);
    else
      total -= c * qpow * gaussian_halfline(n + 1, qt.swapped());
  }
  if (n == 0) total -= Rat(1, 2);
  Rat sign(n % 2 == 0 ? 1 : -1);
  return sign * Rat(factorial(n)) * total;
}

Rat error_term(const BSeq& b, int n) {
  if (n < 0) throw std::domain_error("error_term: need n >= 0");
  quadfield::QuadFieldData d = quadfield::build_quadfield(b);
  const Int& b0 = b.at(0);
  Int pp1 = d.p * d.p_prime - 1;
  Int L = d.q * d.p_prime * b0 - pp1;
  Int M = d.q * b0 * d.theta + 2 * pp1;
  Int N = d.q * d.p * b0 - pp1;
  Rat qr(d.q);
  QuadForm wrap{Rat(L) / qr, Rat(M) / qr, Rat(N) / qr};
  Rat t1 = apply_to_gaussian(make_R(2 * n + 2), wrap);
  QuadForm qtheta{Rat(1), Rat(d.theta), Rat(1)};
  Rat t2(0);
  for (const Int& pp : {d.p, d.p_prime}) {
    Rat acc = gaussian_halfline(n + 1, qtheta);
    for (int m = 1; m <= 2 * n + 1; ++m)
      acc -= Rat(binomial(2 * n + 1, m)) * rat_pow(Rat(pp), m) *
             gaussian_partial(2 * n + 1 - m, m - 1, qtheta);
    t2 += acc;
  }
  t2 *= rat_pow(qr, -(n + 1));
  return lambda_coeff(2 * n + 2) * (-Rat(b0) * t1 - t2);
}

bool quadform_positive_on_cone(const QuadForm& q, const Cone2D& tau) {
  QuadForm qt = compose_on_rays(q, tau.ray1, tau.ray2);
  if (qt.a <= 0 || qt.c <= 0) return false;
  return qt.b >= 0 || qt.b * qt.b < 4 * qt.a * qt.c;
}

}  // namespace toddzeta::zetavalues
