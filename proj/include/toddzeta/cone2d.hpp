#pragma once

#include <string>
#include <vector>

#include "toddzeta/rational.hpp"

namespace toddzeta::cone2d {

using exactmath::Int;

struct Vec2 {
  Int x;
  Int y;
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

// Integer 2x2 matrix [[a, b], [c, d]] acting on column vectors.
struct Mat2 {
  Int a, b, c, d;
  Int det() const { return a * d - b * c; }
  bool operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

Vec2 apply(const Mat2& m, const Vec2& v);
Vec2 apply_row(const Vec2& v, const Mat2& m);  // row vector times matrix
Mat2 mul(const Mat2& m, const Mat2& n);
Mat2 identity_mat();

bool is_primitive(const Vec2& v);

// Rational 2-dimensional cone spanned by two ordered primitive rays.
// Construction validates primitivity and linear independence.
struct Cone2D {
  Vec2 ray1;
  Vec2 ray2;
};

Cone2D make_cone(const Vec2& ray1, const Vec2& ray2);

// Canonical type of an ordered cone: (p, q) with 0 <= p < q, gcd(p, q) = 1,
// together with a unimodular (det +-1) witness sending ray1 to (1, 0) and
// ray2 to (p, q). q equals the multiplicity (index of the sublattice spanned
// by the rays); q = 1 iff the cone is nonsingular.
struct ConeType {
  Int p;
  Int q;
  Mat2 transform;
};

ConeType classify(const Cone2D& cone);
Int multiplicity(const Cone2D& cone);

// Type of the dual cone: (p, q) -> (-p mod q, q).
ConeType dual_type(const ConeType& t);

// Dual cone with rays ordered so that <u_1, ray2> = 0, <u_1, ray1> = q and
// <u_2, ray1> = 0, <u_2, ray2> = q (u_i inward normals of the facets).
Cone2D dual_cone(const Cone2D& cone);

// Rays (h_i, k_i), i = 0..r, of the nonsingular subdivision of the cone
// <(0,-1), (q,p)> given by the convergents of q/p; for p = 0 (q = 1) the
// cone is already nonsingular and the two boundary rays are returned.
std::vector<Vec2> desingularize(const ConeType& t);

std::string str(const Vec2& v);

}  // namespace toddzeta::cone2d
