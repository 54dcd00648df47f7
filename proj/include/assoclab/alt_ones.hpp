#pragma once

#include "assoclab/symring.hpp"

namespace assoclab {

/// Li_k((-1)^k) over {c, zeta_k}: Li_1(-1) = -c, Li_k(-1) = (2^{1-k} - 1) zeta_k
/// for odd k >= 3, and Li_k(1) = zeta_k for even k.
SymExpr signed_polylog_at_unit(int k);

/// Closed form of Li_{1,...,1}(-1,...,-1) with n ones, summed over the
/// partitions n = sum_k k j_k. Weight-homogeneous of weight n.
SymExpr alt_ones_closed_form(int n);

}  // namespace assoclab
