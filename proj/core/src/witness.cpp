#include "pw/witness.hpp"

#include <string>

namespace pw {

void WitnessAssignment::require_size(const QMatrix& m) const {
    if (m.size() != size_) {
        throw DimensionError("witness matrix of size " + std::to_string(m.size()) +
                             " in an assignment of size " + std::to_string(size_));
    }
}

void WitnessAssignment::set_x(int i, QMatrix m) {
    require_size(m);
    x_.insert_or_assign(i, std::move(m));
}

void WitnessAssignment::set_u(int w, QMatrix m) {
    require_size(m);
    u_.insert_or_assign(w, std::move(m));
}

const QMatrix& WitnessAssignment::x(int i) const {
    const auto it = x_.find(i);
    if (it == x_.end()) throw ArityError("no matrix assigned to X" + std::to_string(i));
    return it->second;
}

const QMatrix& WitnessAssignment::u(int w) const {
    const auto it = u_.find(w);
    if (it == u_.end()) throw ArityError("no matrix assigned to U" + std::to_string(w));
    return it->second;
}

bool WitnessAssignment::u_commute() const {
    for (auto a = u_.begin(); a != u_.end(); ++a) {
        for (auto b = std::next(a); b != u_.end(); ++b) {
            if (!(a->second * b->second == b->second * a->second)) return false;
        }
    }
    return true;
}

void WitnessAssignment::require_u_commute() const {
    for (auto a = u_.begin(); a != u_.end(); ++a) {
        for (auto b = std::next(a); b != u_.end(); ++b) {
            if (!(a->second * b->second == b->second * a->second)) {
                throw CommutativityError("U" + std::to_string(a->first) + " and U" +
                                         std::to_string(b->first) + " do not commute");
            }
        }
    }
}

}  // namespace pw
