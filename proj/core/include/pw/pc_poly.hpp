#ifndef PW_PC_POLY_HPP
#define PW_PC_POLY_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pw/admissible.hpp"
#include "pw/partition.hpp"
#include "pw/rational.hpp"

namespace pw {

/// Commutative monomial in the U variables: a sorted multiset of omega indices.
using UMonomial = std::vector<int>;

/// Canonical word m_0 X_{i_1} m_1 ... X_{i_r} m_r; adjacent U-monomials are
/// always merged so equal polynomials have equal term maps.
class NormalWord {
public:
    /// The empty word (the unit).
    NormalWord() : monomials_(1) {}

    static NormalWord letter(int i);
    static NormalWord u(int w);

    const std::vector<int>& letters() const { return letters_; }
    /// monomials().size() == letters().size() + 1.
    const std::vector<UMonomial>& monomials() const { return monomials_; }

    /// Concatenation with the boundary monomials merged.
    friend NormalWord operator*(const NormalWord& a, const NormalWord& b);

    /// E.g. "U3*U4*X1*U5"; "1" for the empty word.
    std::string to_string() const;

    friend auto operator<=>(const NormalWord&, const NormalWord&) = default;

private:
    std::vector<UMonomial> monomials_;
    std::vector<int> letters_;
};

/// Element of F<X_1..X_n> * F[U_w : w in omega] in normal form.
class PCPoly {
public:
    PCPoly(int n, OmegaSet omega);

    static PCPoly constant(int n, OmegaSet omega, const Rational& c);
    static PCPoly letter(int n, OmegaSet omega, int i);
    static PCPoly u(int n, OmegaSet omega, int w);

    int arity() const { return n_; }
    const OmegaSet& omega() const { return omega_; }
    const std::map<NormalWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const NormalWord& w, const Rational& c);

    PCPoly& operator+=(const PCPoly& o);
    PCPoly& operator-=(const PCPoly& o);
    PCPoly& operator*=(const Rational& c);
    friend PCPoly operator+(PCPoly a, const PCPoly& b) { return a += b; }
    friend PCPoly operator-(PCPoly a, const PCPoly& b) { return a -= b; }
    friend PCPoly operator*(const Rational& c, PCPoly a) { return a *= c; }
    friend PCPoly operator*(const PCPoly& a, const PCPoly& b);

    std::string to_string() const;

    friend bool operator==(const PCPoly&, const PCPoly&) = default;

private:
    void require_compatible(const PCPoly& o) const;

    int n_;
    OmegaSet omega_;
    std::map<NormalWord, Rational> terms_;
};

/// [U_{part_1}, ..., U_{part_k}, X_i] multiplied out.
PCPoly expand_bracket(int n, const OmegaSet& omega, int i, const Partition::Part& part);

/// Multiplies out every nested commutator of an admissible polynomial.
PCPoly expand_admissible(const AdmissiblePoly& f);

/// Recovers the admissible coordinates of `p` by solving the exact linear
/// system over the expanded basis. Throws NotAdmissibleError when `p` is
/// outside the span of the admissible basis for (n, omega).
AdmissiblePoly extract_coefficients(const PCPoly& p, int n, const OmegaSet& omega);

struct BasisRank {
    std::size_t rank = 0;
    std::size_t basis_size = 0;
    std::size_t word_count = 0;
};

/// Rank of the expanded admissible basis for (n, omega); it equals
/// basis_size exactly when the basis is linearly independent.
BasisRank admissible_basis_rank(int n, const OmegaSet& omega);

}  // namespace pw

#endif  // PW_PC_POLY_HPP
