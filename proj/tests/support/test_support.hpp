#ifndef PW_TEST_SUPPORT_HPP
#define PW_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pw/admissible.hpp"
#include "pw/field.hpp"
#include "pw/gform.hpp"
#include "pw/matrix.hpp"
#include "pw/multilinear.hpp"
#include "pw/random.hpp"
#include "pw/rational.hpp"
#include "pw/witness.hpp"

namespace pw::test {

/// 1-based matrix unit e_{ij} in M_s.
inline QMatrix e(std::size_t s, std::size_t i, std::size_t j) { return QMatrix::unit(s, i - 1, j - 1); }

inline Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

inline QMatrix diag(std::initializer_list<std::int64_t> entries) {
    std::vector<Rational> v;
    for (auto x : entries) v.emplace_back(x);
    return QMatrix::diagonal(v);
}

/// Schoolbook product on nested vectors, independent of Matrix::operator*.
inline std::vector<std::vector<Rational>> naive_product(const std::vector<std::vector<Rational>>& a,
                                                        const std::vector<std::vector<Rational>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) c[i][j] = c[i][j] + a[i][l] * b[l][j];
    return c;
}

inline std::vector<std::vector<Rational>> rows_of(const QMatrix& m) {
    std::vector<std::vector<Rational>> r;
    for (std::size_t i = 0; i < m.size(); ++i) r.push_back(m.row(i));
    return r;
}

/// Naive bracket [u_1, [u_2, ..., [u_m, x]]] on nested vectors.
inline std::vector<std::vector<Rational>> naive_nested_bracket(
    const std::vector<std::vector<std::vector<Rational>>>& us, std::vector<std::vector<Rational>> x) {
    for (auto it = us.rbegin(); it != us.rend(); ++it) {
        auto ux = naive_product(*it, x);
        auto xu = naive_product(x, *it);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < x.size(); ++j) x[i][j] = ux[i][j] - xu[i][j];
    }
    return x;
}

/// {first, first+1, ..., first+m-1}
inline OmegaSet omega_range(int first, int m) {
    std::vector<int> v;
    for (int t = 0; t < m; ++t) v.push_back(first + t);
    return OmegaSet(v);
}

/// Random g-form over (n, omega, omegabar). With `pi_zero` the coefficients
/// of each (sigma, alpha') group sum to zero, so pi(g) vanishes.
inline GFormPoly random_gform(int n, const OmegaSet& omega, const std::vector<int>& omegabar, bool pi_zero,
                              Rng& rng) {
    GFormPoly g(n, omega, omegabar);
    const auto rest = omega.without(omegabar);
    std::bernoulli_distribution pick(0.5);
    while (g.is_zero()) {
        for (const auto& sigma : Permutation::all(n - 1)) {
            for (const auto& head : enumerate_partitions(rest, n - 1)) {
                if (!pick(rng)) continue;
                const auto alpha = head.extended(omegabar);
                Rational sum;
                for (int j = 1; j <= n; ++j) {
                    Rational c = random_rational(rng, 0.4);
                    if (pi_zero && j == n) c = -sum;
                    sum += c;
                    g.add(PositionKey{sigma, j, alpha}, c);
                }
            }
        }
    }
    return g;
}

/// Commuting assignment for evaluating a g-form: x_1..x_{n-1}, u_n and u_w
/// for w in omega'.
inline WitnessAssignment random_g_witness(const GFormPoly& g, std::size_t s, Rng& rng) {
    WitnessAssignment w(s);
    for (int i = 1; i < g.n(); ++i) w.set_x(i, random_matrix(s, rng));
    const auto uw = g.omega_double_prime();
    const auto us = random_commuting_family(s, uw.size(), rng);
    for (std::size_t t = 0; t < uw.size(); ++t) w.set_u(uw.elements()[t], us[t]);
    return w;
}

/// f over (n, omega) whose X_n-parts all have length >= omegabar.size(), with
/// at least one equal to omegabar and, when possible, others that differ.
inline AdmissiblePoly random_lift_source(int n, const OmegaSet& omega, const std::vector<int>& omegabar,
                                         Rng& rng) {
    AdmissiblePoly f(n, omega);
    std::bernoulli_distribution pick(0.3);
    const auto perms = Permutation::all(n);
    std::vector<Partition> hits;
    for (const auto& alpha : enumerate_partitions(omega, n)) {
        if (alpha.part(n).size() < omegabar.size()) continue;
        for (const auto& sigma : perms) {
            if (pick(rng)) f.add(sigma, alpha, random_nonzero_rational(rng));
        }
        if (alpha.part(n) == omegabar) hits.push_back(alpha);
    }
    std::uniform_int_distribution<std::size_t> hp(0, hits.size() - 1), pp(0, perms.size() - 1);
    const auto alpha = hits[hp(rng)];
    const auto sigma = perms[pp(rng)];
    if (f.coefficient(sigma, alpha).is_zero()) f.add(sigma, alpha, random_nonzero_rational(rng));
    return f;
}

/// Random multilinear f in n >= 2 variables whose coefficients, grouped by the
/// word left after deleting X_n, sum to zero; the first reduction step then
/// takes the rewrite branch.
inline MultilinearPoly random_balanced_multilinear(int n, Rng& rng) {
    MultilinearPoly f(n);
    while (f.is_zero()) {
        for (const auto& sigma : Permutation::all(n - 1)) {
            Rational sum;
            for (int j = 1; j <= n; ++j) {
                Rational c = random_rational(rng, 0.5);
                if (j == n) c = -sum;
                sum += c;
                auto images = sigma.images();
                images.insert(images.begin() + (j - 1), n);
                f.add(Permutation(std::move(images)), c);
            }
        }
    }
    return f;
}

/// Random increasing subsequence of omega of length k.
inline std::vector<int> random_subsequence(const OmegaSet& omega, std::size_t k, Rng& rng) {
    std::vector<int> v = omega.elements();
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(k);
    std::sort(v.begin(), v.end());
    return v;
}

/// The prime field GF(P), used to exercise characteristic-p code paths.
template <std::uint64_t P>
class ModP {
public:
    ModP() = default;
    explicit ModP(std::int64_t v) : v_(static_cast<std::uint64_t>(((v % static_cast<std::int64_t>(P)) + P) % P)) {}

    static ModP zero() { return ModP(); }
    static ModP one() { return ModP(1); }
    static ModP from_int(std::int64_t v) { return ModP(v); }
    static constexpr std::uint64_t characteristic() { return P; }

    bool is_zero() const { return v_ == 0; }
    std::uint64_t value() const { return v_; }

    ModP inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero in GF(p)");
        std::uint64_t r = 1, b = v_, e = P - 2;
        while (e) {
            if (e & 1) r = r * b % P;
            b = b * b % P;
            e >>= 1;
        }
        return raw(r);
    }

    friend ModP operator+(ModP a, ModP b) { return raw((a.v_ + b.v_) % P); }
    friend ModP operator-(ModP a, ModP b) { return raw((a.v_ + P - b.v_) % P); }
    friend ModP operator*(ModP a, ModP b) { return raw(a.v_ * b.v_ % P); }
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
    friend ModP operator-(ModP a) { return raw((P - a.v_) % P); }
    friend bool operator==(ModP, ModP) = default;
    friend std::ostream& operator<<(std::ostream& os, ModP a) { return os << a.v_; }

private:
    static ModP raw(std::uint64_t v) {
        ModP m;
        m.v_ = v;
        return m;
    }
    std::uint64_t v_ = 0;
};

static_assert(Field<ModP<3>>);

}  // namespace pw::test

#endif  // PW_TEST_SUPPORT_HPP
