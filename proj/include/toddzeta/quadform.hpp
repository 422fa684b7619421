#pragma once

#include "toddzeta/cone2d.hpp"
#include "toddzeta/rational.hpp"

namespace toddzeta {

// Binary quadratic form Q(x, y) = a x^2 + b xy + c y^2 with exact rational
// coefficients, in the same coordinates as the lattice it is paired with.
struct QuadForm {
  exactmath::Rat a;
  exactmath::Rat b;
  exactmath::Rat c;

  exactmath::Rat eval(const exactmath::Rat& x, const exactmath::Rat& y) const;
  exactmath::Rat eval(const cone2d::Vec2& v) const;
  // Q with the roles of x and y exchanged: (c, b, a).
  QuadForm swapped() const { return {c, b, a}; }
  bool operator==(const QuadForm& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
};

// Q composed with the parametrization t1 v1 + t2 v2, as a form in (t1, t2).
QuadForm compose_on_rays(const QuadForm& q, const cone2d::Vec2& v1,
                         const cone2d::Vec2& v2);

}  // namespace toddzeta
