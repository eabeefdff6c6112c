#ifndef PW_HOLLOW_HPP
#define PW_HOLLOW_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pw/errors.hpp"
#include "pw/matrix.hpp"

namespace pw {

template <Field F>
struct HollowResult {
    Matrix<F> p;  ///< invertible, size d+1
    Matrix<F> h;  ///< p * embed(a, d+1) * p^{-1}, zero diagonal
};

namespace hollow_detail {

template <Field F>
std::vector<F> mat_vec(const Matrix<F>& a, const std::vector<F>& v) {
    std::vector<F> out(a.size(), F::zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + a(i, j) * v[j];
        }
    }
    return out;
}

template <Field F>
std::size_t vector_rank(std::vector<std::vector<F>> vs, std::size_t dim) {
    return row_echelon(vs, dim).size();
}

/// Candidate vectors in search order: e_1..e_d, then e_i + e_j for i < j.
template <Field F>
std::vector<std::vector<F>> search_order(std::size_t d) {
    std::vector<std::vector<F>> out;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<F> v(d, F::zero());
        v[i] = F::one();
        out.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            std::vector<F> v(d, F::zero());
            v[i] = F::one();
            v[j] = F::one();
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace hollow_detail

/// Columns are f_i = e_i + e_{d+1} (i <= d) and f_{d+1} = e_{d+1} - sum_j e_j.
/// In characteristic dividing d, conjugating diag(I_d, 0) into this basis
/// gives a hollow matrix.
template <Field F>
Matrix<F> scalar_branch_basis(std::size_t d) {
    Matrix<F> b(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        b(i, i) = F::one();
        b(d, i) = F::one();
        b(i, d) = -F::one();
    }
    b(d, d) = F::one();
    return b;
}

/// Invertible p of size d+1 with p * embed(a, d+1) * p^{-1} hollow, for a of
/// trace zero. Recursive: pick v with {v, av} independent, move to a basis
/// starting v, av, recurse on the trailing (d-1)-block.
template <Field F>
Matrix<F> hollow_transform(const Matrix<F>& a) {
    using namespace hollow_detail;
    const std::size_t d = a.size();
    if (a.is_zero()) return Matrix<F>::identity(d + 1);

    std::optional<std::pair<std::vector<F>, std::vector<F>>> chosen;
    for (auto& v : search_order<F>(d)) {
        auto av = mat_vec(a, v);
        std::vector<std::vector<F>> pair;
        pair.push_back(v);
        pair.push_back(av);
        if (vector_rank<F>(std::move(pair), d) == 2) {
            chosen.emplace(std::move(v), std::move(av));
            break;
        }
    }

    if (!chosen) {
        // Every vector is an eigenvector: a = c*I with c != 0, possible only
        // when the characteristic divides d.
        return inverse(scalar_branch_basis<F>(d));
    }

    std::vector<std::vector<F>> basis{chosen->first, chosen->second};
    for (std::size_t i = 0; i < d && basis.size() < d; ++i) {
        std::vector<F> e(d, F::zero());
        e[i] = F::one();
        auto trial = basis;
        trial.push_back(e);
        if (vector_rank<F>(trial, d) == trial.size()) basis = std::move(trial);
    }
    Matrix<F> q_inv(d);  // columns are the new basis
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t r = 0; r < d; ++r) q_inv(r, c) = basis[c][r];
    }
    const Matrix<F> q = inverse(q_inv);
    const Matrix<F> c = q * a * q_inv;
    if (!c(0, 0).is_zero()) throw InvariantViolation("transformed matrix has nonzero corner");

    Matrix<F> b(d - 1);
    for (std::size_t i = 1; i < d; ++i) {
        for (std::size_t j = 1; j < d; ++j) b(i - 1, j - 1) = c(i, j);
    }
    const Matrix<F> r = hollow_transform(b);  // size d

    Matrix<F> left = Matrix<F>::identity(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) left(i + 1, j + 1) = r(i, j);
    }
    Matrix<F> right = Matrix<F>::identity(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) right(i, j) = q(i, j);
    }
    return left * right;
}

/// Throws PreconditionError if trace(a) != 0.
template <Field F>
HollowResult<F> hollow_similarity(const Matrix<F>& a) {
    if (a.size() == 0) throw DimensionError("hollow_similarity needs a nonempty matrix");
    if (!a.trace().is_zero()) throw PreconditionError("hollow_similarity needs a trace-zero matrix");
    Matrix<F> p = hollow_transform(a);
    Matrix<F> h = similarity(p, embed(a, a.size() + 1));
    if (!h.is_hollow()) throw InvariantViolation("hollow similarity produced a nonzero diagonal");
    return HollowResult<F>{std::move(p), std::move(h)};
}

}  // namespace pw

#endif  // PW_HOLLOW_HPP
