#include "toddzeta/bernoulli.hpp"

#include <mutex>

namespace toddzeta::exactmath {

BernoulliTable::BernoulliTable(int initial_max) { ensure(initial_max); }

void BernoulliTable::ensure(int m) {
  if (m < 0) throw std::domain_error("bernoulli: negative index");
  // B_m = -(1/(m+1)) sum_{k<m} C(m+1, k) B_k, starting from B_0 = 1.
  if (numbers_.empty()) numbers_.push_back(Rat(1));
  for (int n = static_cast<int>(numbers_.size()); n <= m; ++n) {
    Rat acc(0);
    for (int k = 0; k < n; ++k)
      acc += Rat(binomial(static_cast<unsigned long>(n) + 1,
                          static_cast<unsigned long>(k))) *
             numbers_[static_cast<std::size_t>(k)];
    numbers_.push_back(-acc / Rat(static_cast<long>(n) + 1));
  }
  for (int n = static_cast<int>(polys_.size()); n <= m; ++n) {
    // Ber_n(x) = sum_k C(n, k) B_k x^{n-k}, coefficients stored ascending.
    std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int k = 0; k <= n; ++k)
      coeffs[static_cast<std::size_t>(n - k)] =
          Rat(binomial(static_cast<unsigned long>(n),
                       static_cast<unsigned long>(k))) *
          numbers_[static_cast<std::size_t>(k)];
    polys_.push_back(std::move(coeffs));
  }
}

Rat BernoulliTable::number(int m) {
  ensure(m);
  return numbers_[static_cast<std::size_t>(m)];
}

Rat BernoulliTable::lambda(int m) {
  Rat r = number(m) / Rat(factorial(static_cast<unsigned long>(m)));
  if (m % 2 != 0) r = -r;
  return r;
}

std::vector<Rat> BernoulliTable::poly(int m) {
  ensure(m);
  return polys_[static_cast<std::size_t>(m)];
}

Rat BernoulliTable::poly_at(int m, const Rat& x) {
  ensure(m);
  const std::vector<Rat>& c = polys_[static_cast<std::size_t>(m)];
  Rat acc(0);
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

namespace {

BernoulliTable& shared_table() {
  static BernoulliTable table(32);
  return table;
}

std::mutex& shared_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Rat bernoulli_number(int m) {
  std::lock_guard<std::mutex> lock(shared_mutex());
  return shared_table().number(m);
}

Rat lambda_coeff(int m) {
  std::lock_guard<std::mutex> lock(shared_mutex());
  return shared_table().lambda(m);
}

std::vector<Rat> bernoulli_poly(int m) {
  std::lock_guard<std::mutex> lock(shared_mutex());
  return shared_table().poly(m);
}

Rat bernoulli_poly_at(int m, const Rat& x) {
  std::lock_guard<std::mutex> lock(shared_mutex());
  return shared_table().poly_at(m, x);
}

Rat ber_hat(int m, const Rat& x) {
  if (x <= 0 || x > 1)
    throw std::domain_error("ber_hat: argument outside (0, 1]");
  if (x == 1) {
    Rat v = bernoulli_number(m);
    if (m == 1) v += make_rat(1, 2);
    return v;
  }
  return bernoulli_poly_at(m, x);
}

}  // namespace toddzeta::exactmath
