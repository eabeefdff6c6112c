#ifndef PW_MULTILINEAR_HPP
#define PW_MULTILINEAR_HPP

#include <map>
#include <string>

#include "pw/permutation.hpp"
#include "pw/rational.hpp"

namespace pw {

/// sum over sigma in S_n of lambda_sigma X_{sigma(1)} ... X_{sigma(n)}.
/// Zero coefficients are never stored.
class MultilinearPoly {
public:
    explicit MultilinearPoly(int n = 1);

    int degree() const { return n_; }
    const std::map<Permutation, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Adds c to the coefficient of sigma, dropping it if the sum is zero.
    void add(const Permutation& sigma, const Rational& c);
    Rational coefficient(const Permutation& sigma) const;

    /// Canonical text, e.g. "X1*X2 - X2*X1" or "0" for the zero polynomial.
    std::string to_string() const;

    friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

private:
    int n_;
    std::map<Permutation, Rational> coeffs_;
};

}  // namespace pw

#endif  // PW_MULTILINEAR_HPP
