#include "toddzeta/cone2d.hpp"

#include <sstream>
#include <stdexcept>

#include "toddzeta/contfrac.hpp"

namespace toddzeta::cone2d {

Vec2 apply(const Mat2& m, const Vec2& v) {
  return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

Vec2 apply_row(const Vec2& v, const Mat2& m) {
  return {v.x * m.a + v.y * m.c, v.x * m.b + v.y * m.d};
}

Mat2 mul(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2 identity_mat() { return {Int(1), Int(0), Int(0), Int(1)}; }

bool is_primitive(const Vec2& v) {
  Int g;
  mpz_gcd(g.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
  return g == 1;
}

Cone2D make_cone(const Vec2& ray1, const Vec2& ray2) {
  if (!is_primitive(ray1) || !is_primitive(ray2))
    throw std::domain_error("make_cone: rays must be primitive");
  if (ray1.x * ray2.y - ray1.y * ray2.x == 0)
    throw std::domain_error("make_cone: rays must be linearly independent");
  return {ray1, ray2};
}

ConeType classify(const Cone2D& cone) {
  // u x1 + v y1 = 1 by the extended gcd; [[u, v], [-y1, x1]] is then a
  // unimodular matrix sending ray1 to (1, 0).
  Int g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
             cone.ray1.x.get_mpz_t(), cone.ray1.y.get_mpz_t());
  Mat2 m{u, v, -cone.ray1.y, cone.ray1.x};
  Vec2 w = apply(m, cone.ray2);
  if (w.y < 0) {
    m = mul(Mat2{Int(1), Int(0), Int(0), Int(-1)}, m);
    w.y = -w.y;
  }
  Int t;
  mpz_fdiv_q(t.get_mpz_t(), w.x.get_mpz_t(), w.y.get_mpz_t());
  m = mul(Mat2{Int(1), -t, Int(0), Int(1)}, m);
  w = apply(m, cone.ray2);
  return {w.x, w.y, m};
}

Int multiplicity(const Cone2D& cone) {
  Int d = cone.ray1.x * cone.ray2.y - cone.ray1.y * cone.ray2.x;
  return d < 0 ? Int(-d) : d;
}

ConeType dual_type(const ConeType& t) {
  if (t.q == 1) return {Int(0), Int(1), identity_mat()};
  return {exactmath::mod_floor(-t.p, t.q), t.q, identity_mat()};
}

Cone2D dual_cone(const Cone2D& cone) {
  Int d = cone.ray1.x * cone.ray2.y - cone.ray1.y * cone.ray2.x;
  Int s = d > 0 ? Int(1) : Int(-1);
  Vec2 u1{s * cone.ray2.y, -s * cone.ray2.x};
  Vec2 u2{-s * cone.ray1.y, s * cone.ray1.x};
  return make_cone(u1, u2);
}

std::vector<Vec2> desingularize(const ConeType& t) {
  if (t.q <= 0) throw std::domain_error("desingularize: need q > 0");
  std::vector<exactmath::Int> entries;
  if (t.p != 0)
    entries = contfrac::ncf_expand(t.q, t.p).entries;
  else if (t.q != 1)
    throw std::domain_error("desingularize: type (0, q) needs q = 1");
  contfrac::ConvergentTable table = contfrac::convergents(entries);
  std::vector<Vec2> rays;
  rays.reserve(table.h.size());
  for (std::size_t i = 0; i < table.h.size(); ++i)
    rays.push_back({table.h[i], table.k[i]});
  return rays;
}

std::string str(const Vec2& v) {
  std::ostringstream os;
  os << "(" << v.x.get_str() << ", " << v.y.get_str() << ")";
  return os.str();
}

}  // namespace toddzeta::cone2d
