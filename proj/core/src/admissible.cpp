#include "pw/admissible.hpp"

#include "pw/errors.hpp"

namespace pw {

AdmissiblePoly::AdmissiblePoly(int n, OmegaSet omega) : n_(n), omega_(std::move(omega)) {
    if (n < 1) throw PreconditionError("admissible polynomial needs at least one variable");
    omega_.require_disjoint_from_variables(n);
}

void AdmissiblePoly::add(const Permutation& sigma, const Partition& alpha, const Rational& c) {
    if (sigma.degree() != n_ || alpha.arity() != n_) {
        throw PreconditionError("term arity does not match admissible polynomial of arity " +
                                std::to_string(n_));
    }
    if (!alpha.partitions(omega_)) {
        throw PreconditionError("partition " + alpha.to_string() + " does not partition " +
                                omega_.to_string());
    }
    if (c.is_zero()) return;
    AdmissibleKey key{sigma, alpha};
    auto [it, inserted] = coeffs_.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

Rational AdmissiblePoly::coefficient(const Permutation& sigma, const Partition& alpha) const {
    const auto it = coeffs_.find(AdmissibleKey{sigma, alpha});
    return it == coeffs_.end() ? Rational::zero() : it->second;
}

AdmissiblePoly& AdmissiblePoly::operator+=(const AdmissiblePoly& o) {
    if (o.n_ != n_ || !(o.omega_ == omega_)) {
        throw PreconditionError("adding admissible polynomials over different (n, omega)");
    }
    for (const auto& [key, c] : o.coeffs_) add(key.sigma, key.alpha, c);
    return *this;
}

AdmissiblePoly& AdmissiblePoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [key, v] : coeffs_) v *= c;
    return *this;
}

std::string AdmissiblePoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : coeffs_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*";
        for (int t = 1; t <= n_; ++t) {
            const int i = key.sigma(t);
            const auto& part = key.alpha.part(i);
            if (part.empty()) {
                out += "X" + std::to_string(i);
            } else {
                out += "[";
                for (int w : part) out += "U" + std::to_string(w) + ",";
                out += "X" + std::to_string(i) + "]";
            }
        }
    }
    return out;
}

AdmissiblePoly from_multilinear(const MultilinearPoly& f) {
    AdmissiblePoly out(f.degree(), OmegaSet{});
    const Partition empty = Partition::empty(f.degree());
    for (const auto& [sigma, c] : f.coeffs()) out.add(sigma, empty, c);
    return out;
}

}  // namespace pw
