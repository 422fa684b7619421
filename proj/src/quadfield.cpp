#include "toddzeta/quadfield.hpp"

#include <stdexcept>

namespace toddzeta::quadfield {

QuadFieldData build_quadfield(const BSeq& b) {
  contfrac::PqData pq = contfrac::pq_data(b);
  QuadFieldData d{b,
                  pq.q,
                  pq.p,
                  pq.p_prime,
                  contfrac::periodic_fixed_point(b),
                  b.at(0) * pq.q - pq.p - pq.p_prime,
                  cone2d::identity_mat()};
  for (long i = 0; i < b.r(); ++i)
    d.epsilon = cone2d::mul(d.epsilon, Mat2{b.at(i), Int(-1), Int(1), Int(0)});
  Mat2 expected{b.at(0) * pq.q - pq.p, -d.quad.c, pq.q, -pq.p_prime};
  if (!(d.epsilon == expected))
    throw std::logic_error("build_quadfield: unit matrix mismatch");
  return d;
}

Vec2 a_vector(const QuadFieldData& d, long k) {
  Vec2 prev{Int(1), Int(0)};  // A_{-1}
  Vec2 cur{Int(0), Int(1)};   // A_0
  if (k == -1) return prev;
  if (k == 0) return cur;
  if (k > 0) {
    for (long i = 0; i < k; ++i) {
      Vec2 next{d.b.at(i) * cur.x - prev.x, d.b.at(i) * cur.y - prev.y};
      prev = cur;
      cur = next;
    }
    return cur;
  }
  for (long i = -1; i > k; --i) {
    Vec2 next{d.b.at(i) * prev.x - cur.x, d.b.at(i) * prev.y - cur.y};
    cur = prev;
    prev = next;
  }
  return prev;
}

QuadForm q_b_form(const QuadFieldData& d) {
  return {Rat(d.quad.c), Rat(-d.quad.b), Rat(d.quad.a)};
}

QuadForm q_form_pair(const QuadFieldData& d, long l, long m) {
  Vec2 al = a_vector(d, l);
  Vec2 am = a_vector(d, m);
  QuadForm direct = compose_on_rays(q_b_form(d), al, am);
  Int qr = a_vector(d, d.b.r()).y;
  Vec2 hl{al.x, -qr * al.x - d.q * al.y};
  Vec2 hm{am.x, -qr * am.x - d.q * am.y};
  QuadForm theta_form{Rat(1), Rat(d.theta), Rat(1)};
  QuadForm via = compose_on_rays(theta_form, hl, hm);
  Rat inv_q = Rat(1) / Rat(d.q);
  via.a *= inv_q;
  via.b *= inv_q;
  via.c *= inv_q;
  if (via.a.get_den() != 1 || via.b.get_den() != 1 || via.c.get_den() != 1)
    throw std::logic_error("q_form_pair: unit-form route not integral");
  if (!(via == direct))
    throw std::logic_error("q_form_pair: routes disagree");
  if (direct.a.get_den() != 1 || direct.b.get_den() != 1 ||
      direct.c.get_den() != 1)
    throw std::logic_error("q_form_pair: non-integral coefficients");
  return direct;
}

Cone2D tau_cone(const QuadFieldData& d) {
  return cone2d::make_cone(Vec2{Int(0), Int(1)}, a_vector(d, d.b.r()));
}

ConeType cone_type_of_tau(const QuadFieldData& d) {
  ConeType t = cone2d::classify(tau_cone(d));
  if (t.q != d.q || t.p != exactmath::mod_floor(-d.p, d.q))
    throw std::logic_error("cone_type_of_tau: unexpected type");
  return t;
}

}  // namespace toddzeta::quadfield
