#include "pw/constructor.hpp"

#include <utility>

#include "pw/errors.hpp"

namespace pw {

namespace {

void require_trace_zero(const QMatrix& a) {
    const Rational t = a.trace();
    if (!t.is_zero()) {
        throw PreconditionError("target matrix must have trace zero, but trace = " + t.to_string());
    }
}

}  // namespace

WitnessAssignment base_case_witness(const Rational& lambda, const std::vector<int>& omegas,
                                    const QMatrix& a) {
    if (lambda.is_zero()) throw PreconditionError("base case needs a nonzero coefficient");
    require_trace_zero(a);
    const Rational lambda_inv = lambda.inverse();
    const std::size_t d = a.size();

    if (omegas.empty()) {
        WitnessAssignment w(d);
        w.set_x(1, a * lambda_inv);
        return w;
    }

    const auto [p, h] = hollow_similarity(a);
    const std::size_t s = d + 1;
    const auto m = static_cast<unsigned>(omegas.size());

    std::vector<Rational> alphas;
    for (std::size_t i = 0; i < s; ++i) alphas.emplace_back(static_cast<std::int64_t>(i));
    const QMatrix u = QMatrix::diagonal(alphas);

    // [u, y]_{ij} = (alpha_i - alpha_j) y_{ij}; solve m-fold entrywise.
    QMatrix x(s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            if (i == j || h(i, j).is_zero()) continue;
            x(i, j) = h(i, j) / (alphas[i] - alphas[j]).pow(m);
        }
    }

    const QMatrix p_inv = inverse(p);
    const QMatrix u_conj = p_inv * u * p;
    WitnessAssignment w(s);
    w.set_x(1, p_inv * x * p * lambda_inv);
    for (int om : omegas) w.set_u(om, u_conj);
    return w;
}

QMatrix ikom_closed_form(std::size_t k, std::size_t j, std::size_t block) {
    if (j > k) {
        throw RangeError("closed form needs j <= k, got j = " + std::to_string(j) +
                         ", k = " + std::to_string(k));
    }
    if (block == 0) throw DimensionError("block size must be positive");
    QMatrix out((k + 1) * block);
    Rational binom = Rational::one();
    for (std::size_t s = 0; s <= j; ++s) {
        const Rational c = (s % 2 == 0) ? binom : -binom;
        out.set_block(k - j + s, s, QMatrix::identity(block) * c);
        binom = binom * Rational(static_cast<std::int64_t>(j - s)) /
                Rational(static_cast<std::int64_t>(s + 1));
    }
    return out;
}

WitnessAssignment lift_witness(const WitnessAssignment& gw, std::size_t k,
                               const std::vector<int>& omegabar, const OmegaSet& omega, int n) {
    if (omegabar.size() != k) throw DimensionError("omegabar must have length k");
    const std::size_t s = gw.size();
    const std::size_t big = (k + 1) * s;
    WitnessAssignment out(big);

    for (int i = 1; i < n; ++i) {
        QMatrix m(big);
        m.set_block(0, 0, gw.x(i));
        out.set_x(i, std::move(m));
    }
    QMatrix xn(big);
    xn.set_block(k, 0, gw.u(n));
    out.set_x(n, std::move(xn));

    const QMatrix shift = cyclic_shift(k, s);
    for (int om : omegabar) {
        if (!omega.contains(om)) throw DimensionError("omegabar element outside omega");
        out.set_u(om, shift);
    }
    const OmegaSet rest = omega.without(omegabar);
    for (int om : rest.elements()) {
        out.set_u(om, block_diagonal_repeat(gw.u(om), k + 1));
    }
    return out;
}

std::string to_string(Branch b) { return b == Branch::PiNonzero ? "pi" : "rewrite"; }

ReductionStep reduce_step(const AdmissiblePoly& f) {
    if (f.is_zero()) throw EmptyPolynomialError("cannot reduce the zero polynomial");
    if (f.arity() < 2) throw PreconditionError("reduction needs at least two variables");
    const auto fidx = reindex_by_position(f);
    auto [k, omegabar] = min_k_and_omegabar(fidx);
    GFormPoly g = build_g(fidx, k, omegabar);
    AdmissiblePoly pi = pi_g(g);
    if (!pi.is_zero()) {
        return ReductionStep{k, std::move(omegabar), std::move(g), std::move(pi), std::nullopt,
                             Branch::PiNonzero};
    }
    AdmissiblePoly rewritten = rewrite_g(g);
    if (rewritten.is_zero()) {
        throw InvariantViolation("both pi(g) and the rewritten g vanish for nonzero f = " +
                                 f.to_string());
    }
    return ReductionStep{k, std::move(omegabar), std::move(g), std::move(pi), std::move(rewritten),
                         Branch::RewriteNonzero};
}

std::size_t size_bound(std::size_t d, const std::vector<TraceStep>& trace) {
    std::size_t bound = d + 1;
    for (const auto& t : trace) bound *= t.k + 1;
    return bound;
}

ConstructedWitness construct_witness(const AdmissiblePoly& f, const QMatrix& a) {
    if (f.is_zero()) throw EmptyPolynomialError("the zero polynomial has image {0}");
    require_trace_zero(a);

    if (f.arity() == 1) {
        // A(omega) has a single element for n = 1, so f = lambda [U_w1, ..., U_wm, X_1].
        const auto& [key, lambda] = *f.coeffs().begin();
        return ConstructedWitness{base_case_witness(lambda, key.alpha.part(1), a), {}};
    }

    const int n = f.arity();
    const ReductionStep step = reduce_step(f);
    ConstructedWitness inner = construct_witness(step.next(), a);
    WitnessAssignment gw = std::move(inner.assignment);
    if (step.branch == Branch::PiNonzero) {
        // g with U_n = 1 is pi(g).
        gw.set_u(n, QMatrix::identity(gw.size()));
    }

    ConstructedWitness out;
    out.assignment = lift_witness(gw, step.k, step.omegabar, f.omega(), n);
    out.trace.push_back(TraceStep{n, step.k, step.omegabar, step.branch});
    out.trace.insert(out.trace.end(), inner.trace.begin(), inner.trace.end());
    return out;
}

ConstructedWitness witness_for_multilinear(const MultilinearPoly& f, const QMatrix& a) {
    if (f.is_zero()) throw EmptyPolynomialError("the zero polynomial has image {0}");
    require_trace_zero(a);
    return construct_witness(from_multilinear(f), a);
}

}  // namespace pw
