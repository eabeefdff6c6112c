#include "pw/verify.hpp"

#include "pw/evaluate.hpp"

namespace pw {

bool verify(const MultilinearPoly& f, const WitnessAssignment& w, const QMatrix& a) {
    if (a.size() > w.size()) throw DimensionError("target is larger than the witness matrices");
    for (int i = 1; i <= f.degree(); ++i) (void)w.x(i);
    if (!w.u_commute()) return false;
    return evaluate(f, w) == embed(a, w.size());
}

}  // namespace pw
