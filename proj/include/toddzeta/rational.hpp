#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace toddzeta::exactmath {

// Arbitrary-precision exact arithmetic. Rat is kept in canonical form by
// GMP (reduced, denominator > 0); Int is an arbitrary-precision integer.
using Int = mpz_class;
using Rat = mpq_class;

// Builds num/den in canonical form. Throws std::domain_error when den == 0.
Rat make_rat(const Int& num, const Int& den);

// Text format: "a/b" with the "/b" omitted when b == 1, e.g. "-1/12", "7".
std::string to_string(const Rat& x);
std::string to_string(const Int& x);

// Parses the "a/b" format (also plain integers). Throws std::invalid_argument
// on malformed input and std::domain_error on a zero denominator.
Rat parse_rat(const std::string& text);

// Floor/ceil of a rational as exact integers.
Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

// {x}: fractional part in [0, 1).
Rat frac_part(const Rat& x);

// <x>: representative of x + Z in the half-open interval (0, 1]; integers
// map to 1. This is the bracket used by the generalized Dedekind sums.
Rat frac_part_half_open(const Rat& x);

// x^e for integer e; negative e inverts (throws std::domain_error on 0^e
// with e < 0). rat_pow(0, 0) == 1.
Rat rat_pow(const Rat& x, long e);
Int int_pow(const Int& x, unsigned long e);

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

// Nonnegative representative of a mod m, m > 0.
Int mod_floor(const Int& a, const Int& m);

double to_double(const Rat& x);

}  // namespace toddzeta::exactmath
