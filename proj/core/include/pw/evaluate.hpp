#ifndef PW_EVALUATE_HPP
#define PW_EVALUATE_HPP

#include "pw/admissible.hpp"
#include "pw/matrix.hpp"
#include "pw/multilinear.hpp"
#include "pw/pc_poly.hpp"
#include "pw/witness.hpp"

namespace pw {

// Evaluation homomorphism X_i -> x_i, U_w -> u_w. Every overload first checks
// that the assigned U matrices pairwise commute (CommutativityError) and
// throws ArityError for a variable without a matrix.

QMatrix evaluate(const MultilinearPoly& f, const WitnessAssignment& w);
QMatrix evaluate(const AdmissiblePoly& f, const WitnessAssignment& w);
QMatrix evaluate(const PCPoly& p, const WitnessAssignment& w);

/// Value of [u_{part_1}, ..., u_{part_k}, x_i].
QMatrix evaluate_bracket(int i, const Partition::Part& part, const WitnessAssignment& w);

}  // namespace pw

#endif  // PW_EVALUATE_HPP
