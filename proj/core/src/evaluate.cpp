#include "pw/evaluate.hpp"

#include <map>
#include <utility>
#include <vector>

namespace pw {

QMatrix evaluate_bracket(int i, const Partition::Part& part, const WitnessAssignment& w) {
    std::vector<QMatrix> us;
    us.reserve(part.size());
    for (int om : part) us.push_back(w.u(om));
    return iterated_commutator(us, w.x(i));
}

QMatrix evaluate(const MultilinearPoly& f, const WitnessAssignment& w) {
    w.require_u_commute();
    QMatrix acc = QMatrix::zero(w.size());
    for (const auto& [sigma, c] : f.coeffs()) {
        QMatrix term = w.x(sigma(1));
        for (int t = 2; t <= f.degree(); ++t) term = term * w.x(sigma(t));
        acc += term * c;
    }
    return acc;
}

QMatrix evaluate(const AdmissiblePoly& f, const WitnessAssignment& w) {
    w.require_u_commute();
    std::map<std::pair<int, Partition::Part>, QMatrix> brackets;
    auto bracket = [&](int i, const Partition::Part& part) -> const QMatrix& {
        auto key = std::make_pair(i, part);
        auto it = brackets.find(key);
        if (it == brackets.end()) it = brackets.emplace(std::move(key), evaluate_bracket(i, part, w)).first;
        return it->second;
    };
    QMatrix acc = QMatrix::zero(w.size());
    for (const auto& [key, c] : f.coeffs()) {
        const int first = key.sigma(1);
        QMatrix term = bracket(first, key.alpha.part(first));
        for (int t = 2; t <= f.arity(); ++t) {
            const int i = key.sigma(t);
            term = term * bracket(i, key.alpha.part(i));
        }
        acc += term * c;
    }
    return acc;
}

QMatrix evaluate(const PCPoly& p, const WitnessAssignment& w) {
    w.require_u_commute();
    QMatrix acc = QMatrix::zero(w.size());
    for (const auto& [word, c] : p.terms()) {
        QMatrix term = QMatrix::identity(w.size());
        const auto& monos = word.monomials();
        const auto& letters = word.letters();
        for (std::size_t t = 0; t < monos.size(); ++t) {
            for (int om : monos[t]) term = term * w.u(om);
            if (t < letters.size()) term = term * w.x(letters[t]);
        }
        acc += term * c;
    }
    return acc;
}

}  // namespace pw
