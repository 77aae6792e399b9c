#pragma once

#include "sympspin/spinor_poly.hpp"

#include <vector>

namespace sympspin::osc {

// Oscillator frame. A frame polynomial reuses SpinorPoly storage with the
// slots reinterpreted: x-slot j holds the exponent of z_j = x_j + i x_{n+j},
// x-slot n+j the exponent of zbar_j = x_j - i x_{n+j}, and q-slot j the index
// c of the Hermite polynomial H_c(q_j) (physicists' normalization).
//
// In this frame the annihilator A_j = d/dq_j and creator C_j = 2q_j - d/dq_j
// act by A H_c = 2c H_{c-1}, C H_c = H_{c+1}, and
//   X_s = (i/2) sum_j (A_j zbar_j + C_j z_j),
//   D_s = sum_j (C_j d/dzbar_j - A_j d/dz_j),
// both preserving the weight w_j = c_j - a_j + b_j (a = z-, b = zbar-exponent).
// The complex twistor components
//   T^+_j = comp_j - i comp_{n+j} = 2 d/dz_j + (1/n) C_j D_s     (w -> w + e_j)
//   T^-_j = comp_j + i comp_{n+j} = 2 d/dzbar_j + (1/n) A_j D_s  (w -> w - e_j)
// have the same joint kernel as the 2n real components.

/// Monomial coordinates -> frame coordinates.
SpinorPoly to_frame(const SpinorPoly& s);
/// Frame coordinates -> monomial coordinates.
SpinorPoly from_frame(const SpinorPoly& f);

std::vector<int> weight(const SpinorMonomial& frameMono);

SpinorPoly apply_Ds(const SpinorPoly& f);
SpinorPoly apply_Xs(const SpinorPoly& f);
SpinorPoly twistor_plus(int j, const SpinorPoly& f);
SpinorPoly twistor_minus(int j, const SpinorPoly& f);

}  // namespace sympspin::osc
