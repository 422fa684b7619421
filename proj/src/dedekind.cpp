#include "toddzeta/dedekind.hpp"

#include <stdexcept>

#include "toddzeta/bernoulli.hpp"
#include "toddzeta/toddseries.hpp"

namespace toddzeta::dedekind {

namespace {

void validate_pq(const Int& p, const Int& q) {
  if (q < 1) throw std::domain_error("dedekind: need q >= 1");
  Int pm = exactmath::mod_floor(p, q);
  Int g;
  mpz_gcd(g.get_mpz_t(), pm.get_mpz_t(), q.get_mpz_t());
  if (q > 1 && g != 1)
    throw std::domain_error("dedekind: p and q must be coprime");
}

}  // namespace

Rat dedekind_direct(int i, int j, const Int& p, const Int& q) {
  if (i < 0 || j < 0) throw std::domain_error("dedekind: need i, j >= 0");
  validate_pq(p, q);
  Rat total(0);
  for (Int a = 1; a <= q; ++a) {
    Rat xa = Rat(a) / Rat(q);
    Int m = exactmath::mod_floor(-a * p, q);
    Rat xb = m == 0 ? Rat(1) : Rat(m) / Rat(q);
    total += exactmath::ber_hat(i, xa) * exactmath::ber_hat(j, xb);
  }
  Int ff = exactmath::factorial(i) * exactmath::factorial(j);
  return total / Rat(ff);
}

Rat f_coeff(int i, int j, const Int& p, const Int& q, ToddMethod method) {
  if (i < 0 || j < 0) throw std::domain_error("f_coeff: need i, j >= 0");
  validate_pq(p, q);
  Int pm = exactmath::mod_floor(p, q);
  if (method == ToddMethod::cf)
    return toddseries::todd_cf_degree_part(pm, q, i + j)
        [static_cast<std::size_t>(j)];
  return toddseries::todd_ppd(pm, q, i + j).series.coeff(i, j);
}

Rat bridge_correction(int i, int j, const Int& q) {
  if (i != 1 && j != 1) return Rat(0);
  Rat bb = exactmath::bernoulli_number(i) * exactmath::bernoulli_number(j);
  if (bb == 0) return Rat(0);
  Int ff = exactmath::factorial(i) * exactmath::factorial(j);
  Rat sign((i + j) % 2 == 0 ? 1 : -1);
  return exactmath::rat_pow(Rat(q), i + j - 1) * sign * bb / Rat(ff);
}

Rat dedekind_via_todd(int i, int j, const Int& p, const Int& q) {
  if (i < 1 || j < 1)
    throw std::domain_error("dedekind_via_todd: need i, j >= 1");
  Rat f = f_coeff(i, j, p, q);
  Rat sign(i % 2 == 0 ? 1 : -1);
  return sign * exactmath::rat_pow(Rat(q), 1 - i - j) *
         (f - bridge_correction(i, j, q));
}

Rat classical_dedekind(const Int& p, const Int& q) {
  Int mp = -p;
  return dedekind_via_todd(1, 1, mp, q);
}

DedekindTable::DedekindTable(const Int& q, int max_order)
    : q_(q), max_order_(max_order) {
  if (q < 1) throw std::domain_error("DedekindTable: need q >= 1");
  if (max_order < 0)
    throw std::domain_error("DedekindTable: need max_order >= 0");
  den_.resize(static_cast<std::size_t>(max_order) + 1);
  values_.resize(static_cast<std::size_t>(max_order) + 1);
  std::size_t qs = q.get_ui();
  for (int i = 0; i <= max_order; ++i) {
    std::vector<Rat> poly = exactmath::bernoulli_poly(i);
    Int den(1);
    for (const Rat& c : poly)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
              c.get_den().get_mpz_t());
    den_[static_cast<std::size_t>(i)] = den;
    // ic[m] = den * q^(i-m) * (coeff of x^m), an integer.
    std::vector<Int> ic(poly.size());
    Int qpow(1);
    for (int m = i; m >= 0; --m) {
      Rat scaled = poly[static_cast<std::size_t>(m)] * Rat(den) * Rat(qpow);
      if (scaled.get_den() != 1)
        throw std::logic_error("DedekindTable: non-integral scaled coeff");
      ic[static_cast<std::size_t>(m)] = scaled.get_num();
      qpow *= q;
    }
    std::vector<Int>& row = values_[static_cast<std::size_t>(i)];
    row.assign(qs, Int(0));
    for (Int a = 1; a < q; ++a) {
      Int v = ic[static_cast<std::size_t>(i)];
      for (int m = i - 1; m >= 0; --m)
        v = v * a + ic[static_cast<std::size_t>(m)];
      row[a.get_ui() - 1] = v;
    }
    Rat slot = exactmath::bernoulli_number(i);
    if (i == 1) slot += Rat(1, 2);
    slot *= exactmath::rat_pow(Rat(q), i) * Rat(den);
    if (slot.get_den() != 1)
      throw std::logic_error("DedekindTable: non-integral boundary slot");
    row[qs - 1] = slot.get_num();
  }
}

Rat DedekindTable::sum(int i, int j, const Int& p) const {
  if (i < 0 || j < 0 || i > max_order_ || j > max_order_)
    throw std::domain_error("DedekindTable::sum: order out of range");
  validate_pq(p, q_);
  const std::vector<Int>& vi = values_[static_cast<std::size_t>(i)];
  const std::vector<Int>& vj = values_[static_cast<std::size_t>(j)];
  Int step = exactmath::mod_floor(-p, q_);
  Int acc(0);
  Int m(0);
  std::size_t qs = q_.get_ui();
  for (std::size_t a = 1; a <= qs; ++a) {
    m += step;
    if (m >= q_) m -= q_;
    std::size_t idx = m == 0 ? qs - 1 : m.get_ui() - 1;
    acc += vi[a - 1] * vj[idx];
  }
  Rat denom = Rat(exactmath::factorial(i)) * Rat(exactmath::factorial(j)) *
              exactmath::rat_pow(Rat(q_), i + j) *
              Rat(den_[static_cast<std::size_t>(i)]) *
              Rat(den_[static_cast<std::size_t>(j)]);
  return Rat(acc) / denom;
}

}  // namespace toddzeta::dedekind
