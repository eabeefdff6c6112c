#ifndef PW_CONSTRUCTOR_HPP
#define PW_CONSTRUCTOR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pw/admissible.hpp"
#include "pw/gform.hpp"
#include "pw/hollow.hpp"
#include "pw/matrix.hpp"
#include "pw/multilinear.hpp"
#include "pw/witness.hpp"

namespace pw {

/// Witness for lambda [U_{w_1}, ..., U_{w_m}, X_1] attaining embed(a, s).
/// s = d when omegas is empty (x_1 = a / lambda), otherwise s = d + 1 with
/// u = p^{-1} diag(0, 1, ..., d) p shared by every U.
WitnessAssignment base_case_witness(const Rational& lambda, const std::vector<int>& omegas,
                                    const QMatrix& a);

/// sum_{s=0}^{j} (-1)^s binom(j, s) e_{k+1-j+s, 1+s} in M_{k+1}(M_block), i.e.
/// the j-fold bracket of the cyclic shift with e_{k+1,1}. Throws RangeError
/// for j > k.
QMatrix ikom_closed_form(std::size_t k, std::size_t j, std::size_t block = 1);

/// Turns a witness for g (size s) into one for f (size (k+1)s):
///   x_i   -> x_i in block (1,1)            for i < n
///   x_n   -> u_n in block (k+1,1)
///   u_w   -> cyclic shift on k+1 blocks    for w in omegabar
///   u_w   -> diag(u_w, ..., u_w)           otherwise
/// so that f evaluates to g's value in the top-left block.
WitnessAssignment lift_witness(const WitnessAssignment& gw, std::size_t k,
                               const std::vector<int>& omegabar, const OmegaSet& omega, int n);

enum class Branch { PiNonzero, RewriteNonzero };

std::string to_string(Branch b);

struct ReductionStep {
    std::size_t k = 0;
    std::vector<int> omegabar;
    GFormPoly g;
    AdmissiblePoly pi_of_g;
    std::optional<AdmissiblePoly> rewritten;
    Branch branch = Branch::PiNonzero;

    /// The polynomial in n-1 variables the recursion continues with.
    const AdmissiblePoly& next() const { return rewritten ? *rewritten : pi_of_g; }
};

/// One level of the reduction from n to n-1 noncommuting variables. Throws
/// EmptyPolynomialError for f == 0 and InvariantViolation if both pi(g) and
/// the rewritten g vanish.
ReductionStep reduce_step(const AdmissiblePoly& f);

struct TraceStep {
    int n = 0;
    std::size_t k = 0;
    std::vector<int> omegabar;
    Branch branch = Branch::PiNonzero;
};

struct ConstructedWitness {
    WitnessAssignment assignment;
    /// One entry per reduction level, outermost first.
    std::vector<TraceStep> trace;

    std::size_t size() const { return assignment.size(); }
};

/// (d+1) * prod (k_level + 1).
std::size_t size_bound(std::size_t d, const std::vector<TraceStep>& trace);

/// Matrices with f(w) = embed(a, s). f nonzero, trace(a) = 0.
ConstructedWitness construct_witness(const AdmissiblePoly& f, const QMatrix& a);

/// Entry point for ordinary multilinear polynomials. Throws
/// EmptyPolynomialError for f == 0 and PreconditionError quoting the trace
/// when trace(a) != 0.
ConstructedWitness witness_for_multilinear(const MultilinearPoly& f, const QMatrix& a);

}  // namespace pw

#endif  // PW_CONSTRUCTOR_HPP
