#ifndef PW_GFORM_HPP
#define PW_GFORM_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "pw/admissible.hpp"
#include "pw/matrix.hpp"
#include "pw/witness.hpp"

namespace pw {

/// Coordinates of a term once the position of X_n is split off: the word is
/// X_{sigma(1)} ... X_{sigma(j-1)} X_n X_{sigma(j)} ... X_{sigma(n-1)} with
/// sigma in S_{n-1} and j in 1..n; alpha is the full n-part partition.
struct PositionKey {
    Permutation sigma;
    int j = 0;
    Partition alpha;

    friend auto operator<=>(const PositionKey&, const PositionKey&) = default;
};

struct PositionIndexed {
    int n = 0;
    OmegaSet omega;
    std::map<PositionKey, Rational> coeffs;
};

/// Re-indexes S_n by (residual sigma in S_{n-1}, position j of X_n). n >= 2.
PositionIndexed reindex_by_position(const AdmissiblePoly& f);
/// Inverse of reindex_by_position.
AdmissiblePoly to_admissible(const PositionIndexed& fidx);

struct MinimalPart {
    std::size_t k = 0;
    std::vector<int> omegabar;
};

/// Smallest length k of alpha^n over nonzero coefficients, and the
/// lexicographically smallest alpha^n of that length. Throws
/// EmptyPolynomialError on the zero polynomial.
MinimalPart min_k_and_omegabar(const PositionIndexed& fidx);

/// The polynomial obtained from f by keeping the terms with alpha^n equal to
/// omegabar and replacing X_n by a new commuting variable U_n. Lives over
/// X_1..X_{n-1} and U_w for w in omega' \cup {n}, omega' = omega \ omegabar.
class GFormPoly {
public:
    GFormPoly(int n, OmegaSet omega, std::vector<int> omegabar);

    int n() const { return n_; }
    const OmegaSet& omega() const { return omega_; }
    const std::vector<int>& omegabar() const { return omegabar_; }
    const std::map<PositionKey, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    OmegaSet omega_prime() const { return omega_.without(omegabar_); }
    OmegaSet omega_double_prime() const { return omega_prime().with(n_); }

    /// key.alpha must be an n-part partition of omega with last part omegabar.
    void add(const PositionKey& key, const Rational& c);

private:
    int n_;
    OmegaSet omega_;
    std::vector<int> omegabar_;
    std::map<PositionKey, Rational> coeffs_;
};

/// Restriction of fidx to alpha^n == omegabar. Throws PreconditionError if a
/// nonzero coefficient has |alpha^n| < k, if |omegabar| != k, or if the
/// restriction is empty.
GFormPoly build_g(const PositionIndexed& fidx, std::size_t k, const std::vector<int>& omegabar);

/// Image of g under U_n -> 1: an admissible polynomial in n-1 variables over
/// omega'. The coefficient of (sigma, alpha) is sum_j lambda_{sigma, alpha, j}.
AdmissiblePoly pi_g(const GFormPoly& g);

/// When pi_g(g) == 0, g itself is admissible over omega' \cup {n}: the
/// coefficient of (sigma, alpha with n prepended to part sigma(i)) is the
/// partial sum sum_{j <= i} lambda_{sigma, alpha, j}. Throws
/// PreconditionError if pi_g(g) != 0.
AdmissiblePoly rewrite_g(const GFormPoly& g);

/// Needs x_1..x_{n-1}, u_n and u_w for w in omega'.
QMatrix evaluate(const GFormPoly& g, const WitnessAssignment& w);

}  // namespace pw

#endif  // PW_GFORM_HPP
