#ifndef PW_LINSOLVE_HPP
#define PW_LINSOLVE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pw/matrix.hpp"

namespace pw {

template <Field F>
struct SolveResult {
    std::size_t rank = 0;
    std::size_t columns = 0;
    /// Empty when the system is inconsistent. Free variables are set to zero.
    std::optional<std::vector<F>> solution;

    bool full_column_rank() const { return rank == columns; }
};

/// Solves the rectangular system A x = b exactly. `a` is row-major with
/// `columns` entries per row.
template <Field F>
SolveResult<F> solve_exact(std::vector<std::vector<F>> a, const std::vector<F>& b,
                           std::size_t columns) {
    if (a.size() != b.size()) throw DimensionError("right-hand side length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != columns) throw DimensionError("ragged coefficient matrix");
        a[i].push_back(b[i]);
    }
    const auto pivots = row_echelon(a, columns);
    SolveResult<F> result;
    result.rank = pivots.size();
    result.columns = columns;
    for (std::size_t r = pivots.size(); r < a.size(); ++r) {
        if (!a[r][columns].is_zero()) return result;
    }
    std::vector<F> x(columns, F::zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][columns];
    result.solution = std::move(x);
    return result;
}

}  // namespace pw

#endif  // PW_LINSOLVE_HPP
