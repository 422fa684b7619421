#include "toddzeta/toddseries.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "toddzeta/bernoulli.hpp"
#include "toddzeta/contfrac.hpp"

namespace toddzeta::toddseries {

using exactmath::lambda_coeff;
using exactmath::rat_pow;

namespace {

void validate_type(const Int& p, const Int& q) {
  if (q < 1) throw std::domain_error("cone type: need q >= 1");
  if (p < 0 || p >= q) throw std::domain_error("cone type: need 0 <= p < q");
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (q > 1 && g != 1)
    throw std::domain_error("cone type: p and q must be coprime");
}

// pw[e][t] = coefficient of x^(e-t) y^t in (a x + b y)^e, e = 0..maxdeg.
std::vector<std::vector<Int>> linear_form_powers(const Int& a, const Int& b,
                                                 int maxdeg) {
  std::vector<std::vector<Int>> pw(static_cast<std::size_t>(maxdeg) + 1);
  pw[0] = {Int(1)};
  for (int e = 1; e <= maxdeg; ++e) {
    pw[static_cast<std::size_t>(e)].assign(static_cast<std::size_t>(e) + 1,
                                           Int(0));
    for (int t = 0; t < e; ++t) {
      const Int& prev =
          pw[static_cast<std::size_t>(e - 1)][static_cast<std::size_t>(t)];
      if (prev == 0) continue;
      pw[static_cast<std::size_t>(e)][static_cast<std::size_t>(t)] += prev * a;
      pw[static_cast<std::size_t>(e)][static_cast<std::size_t>(t + 1)] +=
          prev * b;
    }
  }
  return pw;
}

struct CfData {
  Int p;
  Int q;
  std::vector<Int> entries;                    // [b_1, ..., b_{r-1}]
  std::vector<std::vector<std::vector<Int>>> pw;  // powers of X_0..X_r
  int r = 0;
};

CfData make_cf_data(const Int& p, const Int& q, int maxdeg) {
  CfData d;
  d.p = p;
  d.q = q;
  d.entries = contfrac::ncf_expand(q, p).entries;
  contfrac::ConvergentTable table = contfrac::convergents(d.entries);
  d.r = table.r();
  d.pw.reserve(table.h.size());
  for (std::size_t i = 0; i < table.h.size(); ++i) {
    Int a = -table.h[i];
    Int b = q * table.k[i] - p * table.h[i];
    d.pw.push_back(linear_form_powers(a, b, maxdeg));
  }
  return d;
}

// P evaluated at the linear forms with the given power tables, as the
// coefficient vector of a homogeneous polynomial of degree P.degree in x, y.
std::vector<Rat> eval_pair(const HomoPoly& poly,
                           const std::vector<std::vector<Int>>& pa,
                           const std::vector<std::vector<Int>>& pb) {
  std::vector<Rat> res(static_cast<std::size_t>(poly.degree) + 1, Rat(0));
  for (int k = 0; k <= poly.degree; ++k) {
    const Rat& c = poly.c[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const std::vector<Int>& u = pa[static_cast<std::size_t>(poly.degree - k)];
    const std::vector<Int>& v = pb[static_cast<std::size_t>(k)];
    for (std::size_t t1 = 0; t1 < u.size(); ++t1) {
      if (u[t1] == 0) continue;
      for (std::size_t t2 = 0; t2 < v.size(); ++t2) {
        if (v[t2] == 0) continue;
        Int prod = u[t1] * v[t2];
        res[t1 + t2] += c * Rat(prod);
      }
    }
  }
  return res;
}

// Degree-d homogeneous part of the closed form; c[k] = coeff of x^(d-k) y^k.
std::vector<Rat> cf_degree_part(const CfData& d, int deg) {
  std::vector<Rat> c(static_cast<std::size_t>(deg) + 1, Rat(0));
  if (deg == 0) {
    c[0] = 1;
    return c;
  }
  if (deg == 1) {
    c[0] = Rat(1, 2);
    c[1] = Rat(1, 2);
    return c;
  }
  if (deg % 2 == 1) {
    Rat v = lambda_coeff(deg - 1) * rat_pow(Rat(d.q), deg - 1) / 2;
    c[1] += v;
    c[static_cast<std::size_t>(deg) - 1] += v;
    return c;
  }
  HomoPoly P = make_P(deg);
  for (int i = 1; i <= d.r; ++i) {
    std::vector<Rat> part =
        eval_pair(P, d.pw[static_cast<std::size_t>(i) - 1],
                  d.pw[static_cast<std::size_t>(i)]);
    for (std::size_t t = 0; t < part.size(); ++t)
      if (part[t] != 0) c[t + 1] += Rat(d.q) * part[t];
  }
  Rat lam = lambda_coeff(deg);
  HomoPoly R = make_R(deg);
  for (int i = 1; i <= d.r - 1; ++i) {
    std::vector<Rat> part =
        eval_pair(R, d.pw[static_cast<std::size_t>(i) - 1],
                  d.pw[static_cast<std::size_t>(i) + 1]);
    Int bq = d.entries[static_cast<std::size_t>(i) - 1] * d.q;
    Rat scale = lam * Rat(bq);
    for (std::size_t t = 0; t < part.size(); ++t)
      if (part[t] != 0) c[t + 1] += scale * part[t];
  }
  const std::vector<Int>& x1 =
      d.pw[1][static_cast<std::size_t>(deg) - 1];
  const std::vector<Int>& xr1 =
      d.pw[static_cast<std::size_t>(d.r) - 1][static_cast<std::size_t>(deg) -
                                              1];
  for (int t = 0; t <= deg - 1; ++t) {
    c[static_cast<std::size_t>(t)] -=
        lam * Rat(x1[static_cast<std::size_t>(t)]);
    c[static_cast<std::size_t>(t) + 1] -=
        lam * Rat(xr1[static_cast<std::size_t>(t)]);
  }
  if (deg == 2) c[1] += Rat(d.q) / 2;
  return c;
}

std::vector<Rat> nonsingular_degree_part(int deg) {
  std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k)
    c[static_cast<std::size_t>(k)] =
        lambda_coeff(deg - k) * lambda_coeff(k);
  return c;
}

IdentityReport compare_series(const BiSeries& a, const BiSeries& b) {
  int t = std::min(a.abs_truncation_degree(), b.abs_truncation_degree());
  int vx = std::min(a.valuation().first, b.valuation().first);
  int vy = std::min(a.valuation().second, b.valuation().second);
  for (int d = vx + vy; d <= t; ++d)
    for (int i = d - vy; i >= vx; --i) {
      const Rat& ca = a.coeff(i, d - i);
      const Rat& cb = b.coeff(i, d - i);
      if (ca != cb) {
        std::ostringstream os;
        os << "coefficient of x^" << i << " y^" << d - i << ": "
           << exactmath::to_string(ca) << " vs " << exactmath::to_string(cb);
        return {false, os.str()};
      }
    }
  return {true, ""};
}

}  // namespace

HomoPoly make_P(int d) {
  if (d < 2 || d % 2 != 0)
    throw std::domain_error("make_P: d must be even and >= 2");
  HomoPoly poly;
  poly.degree = d - 2;
  poly.c.assign(static_cast<std::size_t>(d) - 1, Rat(0));
  Rat eps = d == 2 ? Rat(-1) : Rat(1);
  for (int j = 1; j <= d - 1; ++j)
    poly.c[static_cast<std::size_t>(j) - 1] =
        eps * lambda_coeff(d - j) * lambda_coeff(j);
  return poly;
}

HomoPoly make_R(int d) {
  if (d < 2 || d % 2 != 0)
    throw std::domain_error("make_R: d must be even and >= 2");
  HomoPoly poly;
  poly.degree = d - 2;
  poly.c.assign(static_cast<std::size_t>(d) - 1, Rat(0));
  for (int k = 0; k <= d - 2; ++k)
    poly.c[static_cast<std::size_t>(k)] = k % 2 == 0 ? Rat(1) : Rat(-1);
  return poly;
}

ToddSeries todd_nonsingular(int max_total_degree) {
  BiSeries s = exactmath::g_series(0, Int(1), max_total_degree) *
               exactmath::g_series(1, Int(1), max_total_degree);
  return {Int(0), Int(1), max_total_degree, s};
}

ToddSeries todd_ppd(const Int& p, const Int& q, int max_total_degree) {
  validate_type(p, q);
  BiSeries box = BiSeries::zero(max_total_degree);
  for (Int k = 0; k < q; ++k) {
    Int mk = -k;
    Int mm = -exactmath::mod_floor(k * p, q);
    box += exactmath::exp_linear_form(Rat(mk), Rat(mm), max_total_degree);
  }
  BiSeries s = exactmath::g_series(0, q, max_total_degree) *
               exactmath::g_series(1, q, max_total_degree) * box;
  return {p, q, max_total_degree, s.scaled(Rat(1) / Rat(q))};
}

ToddSeries todd_cf(const Int& p, const Int& q, int max_total_degree) {
  validate_type(p, q);
  if (q == 1) return todd_nonsingular(max_total_degree);
  CfData data = make_cf_data(p, q, std::max(max_total_degree - 1, 0));
  BiSeries s = BiSeries::zero(max_total_degree);
  for (int d = 0; d <= max_total_degree; ++d) {
    std::vector<Rat> part = cf_degree_part(data, d);
    for (int k = 0; k <= d; ++k)
      if (part[static_cast<std::size_t>(k)] != 0)
        s.set_coeff(d - k, k, part[static_cast<std::size_t>(k)]);
  }
  return {p, q, max_total_degree, s};
}

std::vector<Rat> todd_cf_degree_part(const Int& p, const Int& q, int d) {
  validate_type(p, q);
  if (d < 0) throw std::domain_error("todd_cf_degree_part: need d >= 0");
  if (q == 1) return nonsingular_degree_part(d);
  CfData data = make_cf_data(p, q, std::max(d - 1, 0));
  return cf_degree_part(data, d);
}

double CyclotomicTodd::coeff_at(int i, int j) const {
  if (i < 0 || j < 0 || i + j > degree)
    throw std::out_of_range("CyclotomicTodd::coeff_at");
  std::size_t idx = static_cast<std::size_t>(i) *
                        static_cast<std::size_t>(degree + 1) -
                    static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) -
                                                   1) /
                        2 +
                    static_cast<std::size_t>(j);
  return coeff[idx];
}

CyclotomicTodd todd_cyclotomic(const Int& p, const Int& q,
                               int max_total_degree) {
  validate_type(p, q);
  using C = std::complex<long double>;
  int D = max_total_degree;
  std::vector<C> acc(static_cast<std::size_t>((D + 1) * (D + 2) / 2), C(0));
  auto at = [D](int i, int j) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(D + 1) -
           static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) - 1) /
               2 +
           static_cast<std::size_t>(j);
  };
  std::vector<long double> fact(static_cast<std::size_t>(D) + 1, 1.0L);
  for (int m = 1; m <= D; ++m)
    fact[static_cast<std::size_t>(m)] =
        fact[static_cast<std::size_t>(m) - 1] * m;
  std::vector<long double> lam(static_cast<std::size_t>(D) + 1);
  for (int m = 0; m <= D; ++m)
    lam[static_cast<std::size_t>(m)] =
        static_cast<long double>(exactmath::to_double(lambda_coeff(m)));
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j)
      acc[at(i, j)] += C(lam[static_cast<std::size_t>(i)] *
                         lam[static_cast<std::size_t>(j)]);
  const long double two_pi = 2.0L * std::acos(-1.0L);
  long qi = q.get_si();
  long pi_ = p.get_si();
  // 1/(1 - c e^{-x}) as a univariate series of length n.
  auto inv_kernel = [&](C c, int n) {
    std::vector<C> d(static_cast<std::size_t>(n)), u(
        static_cast<std::size_t>(n));
    d[0] = C(1) - c;
    for (int m = 1; m < n; ++m)
      d[static_cast<std::size_t>(m)] =
          c * C((m % 2 == 0 ? -1.0L : 1.0L) / fact[static_cast<std::size_t>(
                    m)]);
    u[0] = C(1) / d[0];
    for (int m = 1; m < n; ++m) {
      C s(0);
      for (int t = 1; t <= m; ++t)
        s += d[static_cast<std::size_t>(t)] *
             u[static_cast<std::size_t>(m - t)];
      u[static_cast<std::size_t>(m)] = -s / d[0];
    }
    return u;
  };
  if (D >= 2) {
    for (long k = 1; k < qi; ++k) {
      long m1 = ((k * pi_) % qi + qi) % qi;
      C c1 = std::polar(1.0L, -two_pi * static_cast<long double>(m1) /
                                  static_cast<long double>(qi));
      C c2 = std::polar(1.0L, two_pi * static_cast<long double>(k) /
                                  static_cast<long double>(qi));
      std::vector<C> u = inv_kernel(c1, D - 1);
      std::vector<C> v = inv_kernel(c2, D - 1);
      for (int i = 1; i <= D - 1; ++i)
        for (int j = 1; i + j <= D; ++j)
          acc[at(i, j)] += u[static_cast<std::size_t>(i) - 1] *
                           v[static_cast<std::size_t>(j) - 1];
    }
  }
  CyclotomicTodd out;
  out.p = p;
  out.q = q;
  out.degree = D;
  out.coeff.resize(acc.size());
  for (std::size_t idx = 0; idx < acc.size(); ++idx) {
    out.coeff[idx] = static_cast<double>(acc[idx].real());
    out.max_imag_abs = std::max(
        out.max_imag_abs, static_cast<double>(std::fabs(acc[idx].imag())));
  }
  return out;
}

BiSeries s_series(const ToddSeries& t) {
  return t.series.scaled(Rat(1) / Rat(t.q)).shifted(-1, -1);
}

IdentityReport check_reciprocity(const Int& p, const Int& q, int degree) {
  if (p <= 0 || q <= 0)
    throw std::domain_error("check_reciprocity: need p, q > 0");
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw std::domain_error("check_reciprocity: p, q not coprime");
  int D = degree + 2;
  Rat pq = Rat(p) / Rat(q);
  Rat qp = Rat(q) / Rat(p);
  BiSeries t1 = todd_cf(exactmath::mod_floor(p, q), q, D)
                    .series.substitute_linear(Rat(1), -pq, Rat(0),
                                              Rat(1) / Rat(q));
  BiSeries t2 = todd_cf(exactmath::mod_floor(q, p), p, D)
                    .series.substitute_linear(-qp, Rat(1), Rat(1) / Rat(p),
                                              Rat(0));
  BiSeries t0 = todd_nonsingular(D).series;
  BiSeries f1 = BiSeries::zero(D);  // x (y - (q/p) x)
  f1.set_coeff(1, 1, Rat(1));
  f1.set_coeff(2, 0, -qp);
  BiSeries f2 = BiSeries::zero(D);  // y (x - (p/q) y)
  f2.set_coeff(1, 1, Rat(1));
  f2.set_coeff(0, 2, -pq);
  BiSeries f0 = BiSeries::zero(D);  // (x - (p/q) y)(y - (q/p) x)
  f0.set_coeff(1, 1, Rat(2));
  f0.set_coeff(2, 0, -qp);
  f0.set_coeff(0, 2, -pq);
  return compare_series(t1 * f1 + t2 * f2, t0 * f0);
}

IdentityReport check_even_odd_identity(const Int& p, const Int& q,
                                       int degree) {
  ToddSeries t = todd_cf(p, q, degree);
  BiSeries lhs = t.series -
                 exactmath::g_series(0, q, degree).shifted(0, 1).scaled(
                     Rat(1, 2)) -
                 exactmath::g_series(1, q, degree).shifted(1, 0).scaled(
                     Rat(1, 2));
  BiSeries evens = BiSeries::zero(degree);
  for (int d = 0; d <= degree; d += 2) evens += t.series.homogeneous_part(d);
  BiSeries rhs = evens - BiSeries::monomial(degree, 1, 1, Rat(q) / 2);
  return compare_series(lhs, rhs);
}

}  // namespace toddzeta::toddseries
