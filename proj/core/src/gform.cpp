#include "pw/gform.hpp"

#include <algorithm>

#include "pw/errors.hpp"
#include "pw/evaluate.hpp"

namespace pw {

PositionIndexed reindex_by_position(const AdmissiblePoly& f) {
    const int n = f.arity();
    if (n < 2) throw PreconditionError("position re-indexing needs at least two variables");
    PositionIndexed out{n, f.omega(), {}};
    for (const auto& [key, c] : f.coeffs()) {
        const int j = key.sigma.position_of(n);
        std::vector<int> residual;
        for (int v : key.sigma.images()) {
            if (v != n) residual.push_back(v);
        }
        out.coeffs.emplace(PositionKey{Permutation(std::move(residual)), j, key.alpha}, c);
    }
    return out;
}

AdmissiblePoly to_admissible(const PositionIndexed& fidx) {
    AdmissiblePoly out(fidx.n, fidx.omega);
    for (const auto& [key, c] : fidx.coeffs) {
        auto images = key.sigma.images();
        images.insert(images.begin() + (key.j - 1), fidx.n);
        out.add(Permutation(std::move(images)), key.alpha, c);
    }
    return out;
}

MinimalPart min_k_and_omegabar(const PositionIndexed& fidx) {
    if (fidx.coeffs.empty()) throw EmptyPolynomialError("cannot reduce the zero polynomial");
    MinimalPart best;
    bool found = false;
    for (const auto& [key, c] : fidx.coeffs) {
        const auto& last = key.alpha.part(fidx.n);
        if (!found || last.size() < best.k || (last.size() == best.k && last < best.omegabar)) {
            best.k = last.size();
            best.omegabar = last;
            found = true;
        }
    }
    return best;
}

GFormPoly::GFormPoly(int n, OmegaSet omega, std::vector<int> omegabar)
    : n_(n), omega_(std::move(omega)), omegabar_(std::move(omegabar)) {
    if (n < 2) throw PreconditionError("g-form polynomial needs n >= 2");
    for (std::size_t i = 0; i < omegabar_.size(); ++i) {
        if (!omega_.contains(omegabar_[i]) || (i > 0 && omegabar_[i - 1] >= omegabar_[i])) {
            throw PreconditionError("omegabar must be an increasing subsequence of omega");
        }
    }
}

void GFormPoly::add(const PositionKey& key, const Rational& c) {
    if (key.sigma.degree() != n_ - 1 || key.j < 1 || key.j > n_ || key.alpha.arity() != n_ ||
        !key.alpha.partitions(omega_) || key.alpha.part(n_) != omegabar_) {
        throw PreconditionError("term does not belong to this g-form polynomial");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

GFormPoly build_g(const PositionIndexed& fidx, std::size_t k, const std::vector<int>& omegabar) {
    if (omegabar.size() != k) throw PreconditionError("omegabar must have length k");
    GFormPoly g(fidx.n, fidx.omega, omegabar);
    for (const auto& [key, c] : fidx.coeffs) {
        const auto& last = key.alpha.part(fidx.n);
        if (last.size() < k) {
            throw PreconditionError("nonzero coefficient with |alpha^n| < k violates the lift hypothesis");
        }
        if (last == omegabar) g.add(key, c);
    }
    if (g.is_zero()) throw PreconditionError("no nonzero coefficient has alpha^n equal to omegabar");
    return g;
}

AdmissiblePoly pi_g(const GFormPoly& g) {
    AdmissiblePoly out(g.n() - 1, g.omega_prime());
    for (const auto& [key, c] : g.coeffs()) out.add(key.sigma, key.alpha.truncated(g.n() - 1), c);
    return out;
}

AdmissiblePoly rewrite_g(const GFormPoly& g) {
    if (!pi_g(g).is_zero()) throw PreconditionError("rewrite requires pi(g) == 0");
    const int n = g.n();
    // lambda_{sigma, alpha', j} grouped by (sigma, alpha') with alpha' in A(omega').
    std::map<AdmissibleKey, std::vector<Rational>> grouped;
    for (const auto& [key, c] : g.coeffs()) {
        auto& lambdas = grouped[AdmissibleKey{key.sigma, key.alpha.truncated(n - 1)}];
        lambdas.resize(static_cast<std::size_t>(n));
        lambdas[static_cast<std::size_t>(key.j - 1)] = c;
    }
    AdmissiblePoly out(n - 1, g.omega_double_prime());
    for (const auto& [key, lambdas] : grouped) {
        Rational partial;
        for (int i = 1; i <= n - 1; ++i) {
            partial += lambdas[static_cast<std::size_t>(i - 1)];
            out.add(key.sigma, key.alpha.with_inserted_front(key.sigma(i), n), partial);
        }
    }
    return out;
}

QMatrix evaluate(const GFormPoly& g, const WitnessAssignment& w) {
    w.require_u_commute();
    const int n = g.n();
    const QMatrix& un = w.u(n);
    std::map<std::pair<int, Partition::Part>, QMatrix> brackets;
    auto bracket = [&](int i, const Partition::Part& part) -> const QMatrix& {
        auto key = std::make_pair(i, part);
        auto it = brackets.find(key);
        if (it == brackets.end()) it = brackets.emplace(std::move(key), evaluate_bracket(i, part, w)).first;
        return it->second;
    };
    QMatrix acc = QMatrix::zero(w.size());
    for (const auto& [key, c] : g.coeffs()) {
        QMatrix term = QMatrix::identity(w.size());
        for (int t = 1; t <= n - 1; ++t) {
            if (t == key.j) term = term * un;
            const int i = key.sigma(t);
            term = term * bracket(i, key.alpha.part(i));
        }
        if (key.j == n) term = term * un;
        acc += term * c;
    }
    return acc;
}

}  // namespace pw
