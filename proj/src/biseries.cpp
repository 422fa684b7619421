#include "toddzeta/biseries.hpp"

#include <algorithm>
#include <sstream>

#include "toddzeta/bernoulli.hpp"

namespace toddzeta::exactmath {

namespace {
const Rat kZero(0);
}

BiSeries::BiSeries() : BiSeries(0, 0, 0) {}

BiSeries::BiSeries(int deg, int vx, int vy) : deg_(deg), vx_(vx), vy_(vy) {
  if (deg_ < 0) throw std::invalid_argument("BiSeries: negative degree");
  if (vx_ < -1 || vy_ < -1)
    throw std::domain_error("BiSeries: valuation below (-1, -1)");
  c_.assign(static_cast<std::size_t>((deg_ + 1) * (deg_ + 2) / 2), Rat(0));
}

BiSeries BiSeries::zero(int max_total_degree) {
  return BiSeries(max_total_degree, 0, 0);
}

BiSeries BiSeries::constant(int max_total_degree, const Rat& c) {
  BiSeries s(max_total_degree, 0, 0);
  s.c_[0] = c;
  return s;
}

BiSeries BiSeries::monomial(int max_total_degree, int i, int j, const Rat& c) {
  BiSeries s(max_total_degree, std::min(i, 0), std::min(j, 0));
  s.set_coeff(i, j, c);
  return s;
}

const Rat& BiSeries::coeff(int i, int j) const {
  int a = i - vx_;
  int b = j - vy_;
  if (a < 0 || b < 0) return kZero;
  if (a + b > deg_)
    throw std::out_of_range("BiSeries::coeff: beyond truncation degree");
  return c_[static_cast<std::size_t>(index(a, b))];
}

void BiSeries::set_coeff(int i, int j, const Rat& c) {
  int a = i - vx_;
  int b = j - vy_;
  if (a < 0 || b < 0) {
    if (c == 0) return;
    throw std::domain_error("BiSeries::set_coeff: exponent below valuation");
  }
  if (a + b > deg_)
    throw std::out_of_range("BiSeries::set_coeff: beyond truncation degree");
  c_[static_cast<std::size_t>(index(a, b))] = c;
}

void BiSeries::add_to_coeff(int i, int j, const Rat& c) {
  int a = i - vx_;
  int b = j - vy_;
  if (a < 0 || b < 0) {
    if (c == 0) return;
    throw std::domain_error(
        "BiSeries::add_to_coeff: exponent below valuation");
  }
  if (a + b > deg_)
    throw std::out_of_range(
        "BiSeries::add_to_coeff: beyond truncation degree");
  c_[static_cast<std::size_t>(index(a, b))] += c;
}

BiSeries BiSeries::operator+(const BiSeries& o) const {
  int vx = std::min(vx_, o.vx_);
  int vy = std::min(vy_, o.vy_);
  int t = std::min(abs_truncation_degree(), o.abs_truncation_degree());
  if (t < vx + vy)
    throw std::invalid_argument("BiSeries::operator+: empty result window");
  BiSeries r(t - vx - vy, vx, vy);
  for (int d = vx + vy; d <= t; ++d)
    for (int i = vx; i <= d - vy; ++i) {
      int j = d - i;
      Rat v = coeff(i, j) + o.coeff(i, j);
      if (v != 0) r.set_coeff(i, j, v);
    }
  return r;
}

BiSeries BiSeries::operator-(const BiSeries& o) const { return *this + (-o); }

BiSeries BiSeries::operator-() const {
  BiSeries r = *this;
  for (Rat& v : r.c_) v = -v;
  return r;
}

BiSeries BiSeries::operator*(const BiSeries& o) const {
  int vx = vx_ + o.vx_;
  int vy = vy_ + o.vy_;
  if (vx < -1 || vy < -1)
    throw std::domain_error("BiSeries::operator*: valuation underflow");
  int deg = std::min(deg_, o.deg_);
  BiSeries r(deg, vx, vy);
  for (int s1 = 0; s1 <= deg; ++s1)
    for (int a1 = 0; a1 <= s1; ++a1) {
      const Rat& u = c_[static_cast<std::size_t>(index(a1, s1 - a1))];
      if (u == 0) continue;
      int b1 = s1 - a1;
      for (int s2 = 0; s2 + s1 <= deg; ++s2)
        for (int a2 = 0; a2 <= s2; ++a2) {
          const Rat& w = o.c_[static_cast<std::size_t>(o.index(a2, s2 - a2))];
          if (w == 0) continue;
          int b2 = s2 - a2;
          r.c_[static_cast<std::size_t>(r.index(a1 + a2, b1 + b2))] += u * w;
        }
    }
  return r;
}

BiSeries BiSeries::scaled(const Rat& c) const {
  BiSeries r = *this;
  for (Rat& v : r.c_) v *= c;
  return r;
}

BiSeries BiSeries::shifted(int dx, int dy) const {
  BiSeries r = *this;
  r.vx_ += dx;
  r.vy_ += dy;
  if (r.vx_ < -1 || r.vy_ < -1)
    throw std::domain_error("BiSeries::shifted: valuation below (-1, -1)");
  return r;
}

BiSeries BiSeries::substitute_linear(const Rat& m00, const Rat& m01,
                                     const Rat& m10, const Rat& m11) const {
  if (!is_power_series())
    throw std::domain_error(
        "BiSeries::substitute_linear: requires a power series");
  // powx[i][k] = coeff of x^{i-k} y^k in (m00 x + m01 y)^i, same for powy.
  std::vector<std::vector<Rat>> powx(static_cast<std::size_t>(deg_) + 1);
  std::vector<std::vector<Rat>> powy(static_cast<std::size_t>(deg_) + 1);
  powx[0] = {Rat(1)};
  powy[0] = {Rat(1)};
  for (int i = 1; i <= deg_; ++i) {
    powx[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1,
                                             Rat(0));
    powy[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1,
                                             Rat(0));
    for (int k = 0; k < i; ++k) {
      const Rat& px = powx[static_cast<std::size_t>(i - 1)]
                          [static_cast<std::size_t>(k)];
      if (px != 0) {
        powx[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
            px * m00;
        powx[static_cast<std::size_t>(i)][static_cast<std::size_t>(k + 1)] +=
            px * m01;
      }
      const Rat& py = powy[static_cast<std::size_t>(i - 1)]
                          [static_cast<std::size_t>(k)];
      if (py != 0) {
        powy[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
            py * m10;
        powy[static_cast<std::size_t>(i)][static_cast<std::size_t>(k + 1)] +=
            py * m11;
      }
    }
  }
  BiSeries r(deg_, 0, 0);
  for (int s = 0; s <= deg_; ++s)
    for (int a = 0; a <= s; ++a) {
      const Rat& u = c_[static_cast<std::size_t>(index(a, s - a))];
      if (u == 0) continue;
      int b = s - a;
      const std::vector<Rat>& fx = powx[static_cast<std::size_t>(a)];
      const std::vector<Rat>& fy = powy[static_cast<std::size_t>(b)];
      for (int k1 = 0; k1 <= a; ++k1) {
        if (fx[static_cast<std::size_t>(k1)] == 0) continue;
        Rat ufx = u * fx[static_cast<std::size_t>(k1)];
        for (int k2 = 0; k2 <= b; ++k2) {
          if (fy[static_cast<std::size_t>(k2)] == 0) continue;
          int yexp = k1 + k2;
          r.c_[static_cast<std::size_t>(r.index(s - yexp, yexp))] +=
              ufx * fy[static_cast<std::size_t>(k2)];
        }
      }
    }
  return r;
}

BiSeries BiSeries::exp() const {
  if (!is_power_series() || coeff(0, 0) != 0)
    throw std::domain_error(
        "BiSeries::exp: requires a power series with zero constant term");
  BiSeries acc = BiSeries::constant(deg_, Rat(1));
  BiSeries pw = BiSeries::constant(deg_, Rat(1));
  Rat fact(1);
  for (int m = 1; m <= deg_; ++m) {
    pw = pw * *this;
    fact *= m;
    acc += pw.scaled(Rat(1) / fact);
  }
  return acc;
}

BiSeries BiSeries::inverse() const {
  if (!is_power_series())
    throw std::domain_error("BiSeries::inverse: requires a power series");
  const Rat& a0 = c_[0];
  if (a0 == 0)
    throw std::domain_error("BiSeries::inverse: zero constant term");
  BiSeries r(deg_, 0, 0);
  r.c_[0] = Rat(1) / a0;
  for (int t = 1; t <= deg_; ++t)
    for (int a = 0; a <= t; ++a) {
      int b = t - a;
      Rat acc(0);
      for (int u = 0; u <= a; ++u)
        for (int v = 0; v <= b; ++v) {
          if (u == 0 && v == 0) continue;
          const Rat& f = c_[static_cast<std::size_t>(index(u, v))];
          if (f == 0) continue;
          acc += f * r.c_[static_cast<std::size_t>(index(a - u, b - v))];
        }
      if (acc != 0)
        r.c_[static_cast<std::size_t>(index(a, b))] = -acc / a0;
    }
  return r;
}

BiSeries BiSeries::truncated(int new_max_total_degree) const {
  if (new_max_total_degree > deg_)
    throw std::invalid_argument(
        "BiSeries::truncated: cannot extend the truncation window");
  BiSeries r(new_max_total_degree, vx_, vy_);
  std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(r.c_.size()),
            r.c_.begin());
  return r;
}

BiSeries BiSeries::homogeneous_part(int d) const {
  BiSeries r(deg_, vx_, vy_);
  int rel = d - vx_ - vy_;
  if (rel < 0 || rel > deg_) return r;
  for (int a = 0; a <= rel; ++a)
    r.c_[static_cast<std::size_t>(index(a, rel - a))] =
        c_[static_cast<std::size_t>(index(a, rel - a))];
  return r;
}

bool BiSeries::is_zero() const {
  for (const Rat& v : c_)
    if (v != 0) return false;
  return true;
}

bool BiSeries::operator==(const BiSeries& o) const {
  int t = std::min(abs_truncation_degree(), o.abs_truncation_degree());
  int vx = std::min(vx_, o.vx_);
  int vy = std::min(vy_, o.vy_);
  for (int d = vx + vy; d <= t; ++d)
    for (int i = vx; i <= d - vy; ++i)
      if (coeff(i, d - i) != o.coeff(i, d - i)) return false;
  return true;
}

std::vector<std::pair<std::pair<int, int>, Rat>> BiSeries::terms() const {
  std::vector<std::pair<std::pair<int, int>, Rat>> out;
  for (int d = vx_ + vy_; d <= abs_truncation_degree(); ++d)
    for (int i = d - vy_; i >= vx_; --i) {
      const Rat& v = coeff(i, d - i);
      if (v != 0) out.push_back({{i, d - i}, v});
    }
  return out;
}

namespace {

std::string monomial_str(int i, int j) {
  std::ostringstream os;
  if (i != 0) {
    os << "x";
    if (i != 1) os << "^" << i;
  }
  if (j != 0) {
    if (i != 0) os << "*";
    os << "y";
    if (j != 1) os << "^" << j;
  }
  return os.str();
}

}  // namespace

std::string BiSeries::str() const {
  auto ts = terms();
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, v] : ts) {
    Rat mag = v < 0 ? Rat(-v) : v;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    std::string mono = monomial_str(ij.first, ij.second);
    if (mono.empty())
      os << to_string(mag);
    else if (mag == 1)
      os << mono;
    else
      os << to_string(mag) << "*" << mono;
  }
  return os.str();
}

BiSeries exp_linear_form(const Rat& alpha, const Rat& beta,
                         int max_total_degree) {
  BiSeries r = BiSeries::zero(max_total_degree);
  // coeff(a, b) = alpha^a beta^b / (a! b!), built by running products.
  Rat row(1);  // alpha^a / a!
  for (int a = 0; a <= max_total_degree; ++a) {
    if (a > 0) {
      row *= alpha;
      row /= a;
      if (row == 0) break;
    }
    Rat cur = row;  // alpha^a beta^b / (a! b!)
    for (int b = 0; a + b <= max_total_degree; ++b) {
      if (b > 0) {
        cur *= beta;
        cur /= b;
        if (cur == 0) break;
      }
      r.set_coeff(a, b, cur);
    }
  }
  return r;
}

BiSeries g_series(int var, const Int& scale, int max_total_degree) {
  if (var != 0 && var != 1)
    throw std::invalid_argument("g_series: var must be 0 (x) or 1 (y)");
  BiSeries r = BiSeries::zero(max_total_degree);
  Rat pw(1);
  for (int m = 0; m <= max_total_degree; ++m) {
    if (m > 0) pw *= Rat(scale);
    Rat v = lambda_coeff(m) * pw;
    if (v != 0) r.set_coeff(var == 0 ? m : 0, var == 0 ? 0 : m, v);
  }
  return r;
}

}  // namespace toddzeta::exactmath
