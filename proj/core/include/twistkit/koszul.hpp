#pragma once

#include "twistkit/twisting.hpp"

namespace twistkit {

/// Quadratic-dual style construction for m-homogeneous presentations:
/// A^! = k<V^*> / (R^perp), with R^perp the annihilator of R in the dual
/// word space under the dual-basis pairing.  Generators are the primal
/// names decorated with "^".
AlgebraPtr koszul_dual(const Algebra& a);

/// The dual family tau^!_i = (tau_i^{-1})^* acting on V^*.  In the row
/// convention x_j |-> sum_l M(j,l) x_l this is the inverse transpose of
/// the degree-one matrix of tau_i.
TwistingSystem dual_twisting_system(const TwistingSystem& t);

/// <tau^!_i(f), a> = <f, tau_i^{-1}(a)> on word bases up to degree d.
Report verify_dual_pairing(const TwistingSystem& t,
                           const TwistingSystem& dual, std::size_t d);

/// (R^perp)^{tau^!} = (R^tau)^perp: twisting commutes with homogeneous
/// dualization.
Report verify_dual_twist_compat(const Algebra& a, const TwistingSystem& t);

}  // namespace twistkit
