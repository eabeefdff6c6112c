#ifndef PW_ADMISSIBLE_HPP
#define PW_ADMISSIBLE_HPP

#include <compare>
#include <map>
#include <string>

#include "pw/multilinear.hpp"
#include "pw/partition.hpp"
#include "pw/permutation.hpp"
#include "pw/rational.hpp"

namespace pw {

struct AdmissibleKey {
    Permutation sigma;
    Partition alpha;

    friend auto operator<=>(const AdmissibleKey&, const AdmissibleKey&) = default;
};

/// Admissible partially commutative polynomial, stored by its coordinates
/// lambda_{sigma,alpha} in the basis (X_{sigma(1)} ... X_{sigma(n)})^alpha.
/// Those basis elements are linearly independent, so the polynomial is zero
/// exactly when no coefficient is stored.
class AdmissiblePoly {
public:
    AdmissiblePoly(int n, OmegaSet omega);

    int arity() const { return n_; }
    const OmegaSet& omega() const { return omega_; }
    const std::map<AdmissibleKey, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }

    /// Throws PreconditionError if sigma or alpha do not fit (n, omega).
    void add(const Permutation& sigma, const Partition& alpha, const Rational& c);
    Rational coefficient(const Permutation& sigma, const Partition& alpha) const;

    AdmissiblePoly& operator+=(const AdmissiblePoly& o);
    AdmissiblePoly& operator*=(const Rational& c);
    friend AdmissiblePoly operator+(AdmissiblePoly a, const AdmissiblePoly& b) { return a += b; }
    friend AdmissiblePoly operator*(const Rational& c, AdmissiblePoly a) { return a *= c; }

    std::string to_string() const;

    friend bool operator==(const AdmissiblePoly&, const AdmissiblePoly&) = default;

private:
    int n_;
    OmegaSet omega_;
    std::map<AdmissibleKey, Rational> coeffs_;
};

/// Multilinear polynomials are the admissible ones with empty omega.
AdmissiblePoly from_multilinear(const MultilinearPoly& f);

}  // namespace pw

#endif  // PW_ADMISSIBLE_HPP
