#ifndef SPINFERMION_SPIN_TO_FERMION_HPP
#define SPINFERMION_SPIN_TO_FERMION_HPP

#include "spinfermion/expansion.hpp"
#include "spinfermion/operators.hpp"

namespace spinfermion {

/// S+ over the fermionic basis at L = log2(2s+1): the off-diagonal of S+
/// fed through the V_c^{-1} contraction. Reconstruction is exact.
OperatorExpansion spin_plus_fermionic(const SpinRep& rep);

/// S_z = -s 1 + sum_{j=1}^{L} 2^{j-1} n_{L+1-j}; identity plus number
/// operators only.
OperatorExpansion spin_z_fermionic(const SpinRep& rep);

} // namespace spinfermion

#endif
