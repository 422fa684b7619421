#include "toddzeta/rational.hpp"

namespace toddzeta::exactmath {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) { return x.get_str(); }

std::string to_string(const Int& x) { return x.get_str(); }

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("parse_rat: malformed rational '" + text +
                                "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw std::domain_error("parse_rat: zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rat frac_part(const Rat& x) { return x - Rat(floor_rat(x)); }

Rat frac_part_half_open(const Rat& x) {
  Rat f = frac_part(x);
  if (f == 0) return Rat(1);
  return f;
}

Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  bool invert = e < 0;
  unsigned long ue = invert ? static_cast<unsigned long>(-(e + 1)) + 1UL
                            : static_cast<unsigned long>(e);
  if (invert && x == 0)
    throw std::domain_error("rat_pow: negative power of zero");
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), ue);
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), ue);
  if (invert) {
    mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  }
  return r;
}

Int int_pow(const Int& x, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int mod_floor(const Int& a, const Int& m) {
  if (m <= 0) throw std::domain_error("mod_floor: modulus must be positive");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

double to_double(const Rat& x) { return x.get_d(); }

}  // namespace toddzeta::exactmath
