#include "pw/multilinear.hpp"

#include "pw/errors.hpp"

namespace pw {

MultilinearPoly::MultilinearPoly(int n) : n_(n) {
    if (n < 1) throw PreconditionError("multilinear polynomial needs at least one variable");
}

void MultilinearPoly::add(const Permutation& sigma, const Rational& c) {
    if (sigma.degree() != n_) throw ArityError("permutation degree does not match polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(sigma, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

Rational MultilinearPoly::coefficient(const Permutation& sigma) const {
    const auto it = coeffs_.find(sigma);
    return it == coeffs_.end() ? Rational::zero() : it->second;
}

std::string MultilinearPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [sigma, c] : coeffs_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = negative ? -c : c;
        if (!(mag == Rational::one())) out += mag.to_string() + "*";
        for (int i = 1; i <= n_; ++i) {
            if (i > 1) out += "*";
            out += "X" + std::to_string(sigma(i));
        }
        first = false;
    }
    return out;
}

}  // namespace pw
