#pragma once

#include "toddzeta/bseq.hpp"
#include "toddzeta/cone2d.hpp"
#include "toddzeta/contfrac.hpp"
#include "toddzeta/quadform.hpp"
#include "toddzeta/rational.hpp"

namespace toddzeta::quadfield {

using cone2d::Cone2D;
using cone2d::ConeType;
using cone2d::Mat2;
using cone2d::Vec2;
using exactmath::Int;
using exactmath::Rat;

// Data of the real quadratic irrationality w_0 = [[b_0, ..., b_{r-1}]]:
// the module M_b = Z w_0 + Z with basis A_{-1} = w_0, A_0 = 1, the quadratic
// A_b w^2 + B_b w + C_b = 0, the norm-like form
//     Q_b(u A_{-1} + v A_0) = C_b u^2 - B_b u v + A_b v^2 > 0 on the cone,
// theta = b_0 q - p - p', and the coordinate matrix of the fundamental
// totally positive unit eps = w_0 w_1 ... w_{r-1} (eps A_k = A_{k-r}).
//
// All vectors are coordinate pairs in the basis {A_{-1}, A_0}.
struct QuadFieldData {
  BSeq b;
  Int q;
  Int p;
  Int p_prime;
  contfrac::FixedPointQuadratic quad;
  Int theta;
  // Ordered product [[b_0,-1],[1,0]] ... [[b_{r-1},-1],[1,0]], det 1. It acts
  // on ROW coordinate vectors: coords(A_k) * epsilon = coords(A_{k-r}); its
  // transpose is the column action [[q_r, p_r], [-q_{r-1}, -p_{r-1}]].
  Mat2 epsilon;
};

QuadFieldData build_quadfield(const BSeq& b);

// Coordinates of A_k in {A_{-1}, A_0}: A_{-1} = (1, 0), A_0 = (0, 1),
// A_{k+1} = b_k A_k - A_{k-1} for every integer k (periodic entries).
// Writing A_k = -p_k A_{-1} + q_k A_0, q_k / p_k = [b_0, ..., b_{k-1}].
Vec2 a_vector(const QuadFieldData& d, long k);

// Q_b as a form on {A_{-1}, A_0} coordinates: (C_b, -B_b, A_b).
QuadForm q_b_form(const QuadFieldData& d);

// Integer form Q_b(x A_l + y A_m), computed two ways (directly on
// coordinates, and as (1/q) Q_Theta(H_l x + H_m y, K_l x + K_m y) with
// H_i = -p_i, K_i = q_r p_i - q q_i and Q_Theta = X^2 + Theta XY + Y^2);
// disagreement or non-integrality throws std::logic_error.
QuadForm q_form_pair(const QuadFieldData& d, long l, long m);

// The cone tau_b = <A_0, A_r> in {A_{-1}, A_0} coordinates.
Cone2D tau_cone(const QuadFieldData& d);

// Canonical type of tau_b. It equals (-p mod q, q); the dual cone sigma_b
// has type (p, q).
ConeType cone_type_of_tau(const QuadFieldData& d);

}  // namespace toddzeta::quadfield
