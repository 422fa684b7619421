#include "toddzeta/quadform.hpp"

namespace toddzeta {

using exactmath::Rat;

Rat QuadForm::eval(const Rat& x, const Rat& y) const {
  return a * x * x + b * x * y + c * y * y;
}

Rat QuadForm::eval(const cone2d::Vec2& v) const {
  return eval(Rat(v.x), Rat(v.y));
}

QuadForm compose_on_rays(const QuadForm& q, const cone2d::Vec2& v1,
                         const cone2d::Vec2& v2) {
  Rat x1(v1.x), y1(v1.y), x2(v2.x), y2(v2.y);
  Rat cross = 2 * q.a * x1 * x2 + q.b * (x1 * y2 + y1 * x2) +
              2 * q.c * y1 * y2;
  return {q.eval(v1), cross, q.eval(v2)};
}

}  // namespace toddzeta
