#pragma once

#include <vector>

#include "oddsym/scalar.hpp"

namespace oddsym {

// vector in V(-ell) over Z[q,q^-1]^pi in the basis b_0 .. b_ell
using VVec = std::vector<GP>;

VVec vbasis(int ell, int n);
VVec act_E(int ell, int d, const VVec& v);
VVec act_F(int ell, int d, const VVec& v);
VVec act_Ebar(int ell, int d, const VVec& v);
VVec act_Fbar(int ell, int d, const VVec& v);
VVec t_forward(int ell, const VVec& v);
VVec t_inverse(int ell, const VVec& v);
VVec varpi(int ell, const VVec& v);
VVec vscale(const GP& c, const VVec& v);
VVec vadd(const VVec& a, const VVec& b);
// coefficient c with T(b_n) = c b_{ell-n}
GP t_coeff(int ell, int n);

}  // namespace oddsym
