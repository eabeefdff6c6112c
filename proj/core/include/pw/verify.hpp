#ifndef PW_VERIFY_HPP
#define PW_VERIFY_HPP

#include "pw/matrix.hpp"
#include "pw/multilinear.hpp"
#include "pw/witness.hpp"

namespace pw {

/// True iff the U matrices commute and f(w) == embed(a, w.size()) exactly.
/// Uses only direct evaluation. Throws DimensionError if a is larger than
/// the witness and ArityError if an X matrix is missing.
bool verify(const MultilinearPoly& f, const WitnessAssignment& w, const QMatrix& a);

}  // namespace pw

#endif  // PW_VERIFY_HPP
