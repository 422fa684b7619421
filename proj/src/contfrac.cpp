#include "toddzeta/contfrac.hpp"

#include <stdexcept>

namespace toddzeta::contfrac {

Ncf ncf_expand(const Int& q, const Int& p) {
  if (p <= 0 || p > q) throw std::domain_error("ncf_expand: need 0 < p <= q");
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw std::domain_error("ncf_expand: p, q not coprime");
  Ncf out;
  Int a = q, b = p;
  while (b > 0) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    out.entries.push_back(c);
    Int next = c * b - a;
    a = b;
    b = next;
  }
  return out;
}

Rat ncf_eval(const std::vector<Int>& entries) {
  if (entries.empty()) throw std::domain_error("ncf_eval: empty expansion");
  Rat t(entries.back());
  for (std::size_t i = entries.size() - 1; i-- > 0;) {
    if (t == 0)
      throw std::domain_error("ncf_eval: zero intermediate denominator");
    t = Rat(entries[i]) - Rat(1) / t;
  }
  return t;
}

ConvergentTable convergents(const std::vector<Int>& entries) {
  ConvergentTable t;
  t.h = {Int(0), Int(1)};
  t.k = {Int(-1), Int(0)};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::size_t n = t.h.size();
    t.h.push_back(entries[i] * t.h[n - 1] - t.h[n - 2]);
    t.k.push_back(entries[i] * t.k[n - 1] - t.k[n - 2]);
  }
  return t;
}

PqData pq_data(const BSeq& b) {
  std::vector<Int> tail(b.entries().begin() + 1, b.entries().end());
  ConvergentTable t = convergents(tail);
  std::size_t n = t.h.size() - 1;
  PqData d{t.h[n], t.k[n], t.h[n - 1]};
  if (d.q > 1) {
    Int res = exactmath::mod_floor(d.p * d.p_prime, d.q);
    if (res != 1)
      throw std::logic_error("pq_data: p p' != 1 (mod q)");
  }
  return d;
}

FixedPointQuadratic periodic_fixed_point(const BSeq& b) {
  PqData d = pq_data(b);
  const Int& b0 = b.at(0);
  Int num = 1 - d.p * d.p_prime;
  Int c_tail, rem;
  mpz_fdiv_qr(c_tail.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              d.q.get_mpz_t());
  if (rem != 0)
    throw std::logic_error("periodic_fixed_point: (1 - p p') not divisible");
  FixedPointQuadratic f;
  f.a = d.q;
  f.b = -b0 * d.q + d.p - d.p_prime;
  f.c = b0 * d.p_prime + c_tail;
  f.disc = f.b * f.b - 4 * f.a * f.c;
  if (f.disc <= 0)
    throw std::logic_error("periodic_fixed_point: nonpositive discriminant");
  return f;
}

}  // namespace toddzeta::contfrac
