#include "pw/random.hpp"

#include <cstdlib>
#include <string>

#include "pw/errors.hpp"
#include "pw/partition.hpp"

namespace pw {

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("PW_SEED"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::logic_error&) {
        }
        throw PreconditionError(std::string("PW_SEED is not an unsigned integer: ") + env);
    }
    return kDefaultSeed;
}

Rational random_nonzero_rational(Rng& rng) {
    std::uniform_int_distribution<int> num(1, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::bernoulli_distribution negative(0.5);
    const int p = num(rng);
    const int q = den(rng);
    return Rational(negative(rng) ? -p : p, q);
}

Rational random_rational(Rng& rng, double zero_probability) {
    std::bernoulli_distribution is_zero(zero_probability);
    if (is_zero(rng)) return Rational::zero();
    return random_nonzero_rational(rng);
}

MultilinearPoly random_multilinear(int n, double density, Rng& rng) {
    MultilinearPoly f(n);
    if (density <= 0.0) return f;
    std::bernoulli_distribution pick(density);
    const auto perms = Permutation::all(n);
    for (const auto& sigma : perms) {
        if (pick(rng)) f.add(sigma, random_nonzero_rational(rng));
    }
    if (f.is_zero()) {
        std::uniform_int_distribution<std::size_t> which(0, perms.size() - 1);
        f.add(perms[which(rng)], random_nonzero_rational(rng));
    }
    return f;
}

MultilinearPoly random_multilinear(int n, double density, std::uint64_t seed) {
    Rng rng(seed);
    return random_multilinear(n, density, rng);
}

QMatrix random_trace_zero(std::size_t d, Rng& rng) {
    QMatrix a(d);
    Rational diag_sum;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (i == d - 1 && j == d - 1) continue;
            a(i, j) = random_rational(rng);
            if (i == j) diag_sum += a(i, j);
        }
    }
    a(d - 1, d - 1) = -diag_sum;
    return a;
}

QMatrix random_trace_zero(std::size_t d, std::uint64_t seed) {
    Rng rng(seed);
    return random_trace_zero(d, rng);
}

QMatrix random_matrix(std::size_t s, Rng& rng, double zero_probability) {
    QMatrix m(s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) m(i, j) = random_rational(rng, zero_probability);
    }
    return m;
}

std::vector<QMatrix> random_commuting_family(std::size_t s, std::size_t count, Rng& rng) {
    const QMatrix base = random_matrix(s, rng, 0.5);
    const QMatrix base_sq = base * base;
    std::vector<QMatrix> out;
    for (std::size_t t = 0; t < count; ++t) {
        QMatrix m = QMatrix::identity(s) * random_rational(rng) + base * random_rational(rng) +
                    base_sq * random_rational(rng, 0.6);
        out.push_back(std::move(m));
    }
    return out;
}

AdmissiblePoly random_admissible(int n, const OmegaSet& omega, double density, Rng& rng) {
    AdmissiblePoly f(n, omega);
    if (density <= 0.0) return f;
    std::bernoulli_distribution pick(density);
    const auto perms = Permutation::all(n);
    const auto parts = enumerate_partitions(omega, n);
    for (const auto& sigma : perms) {
        for (const auto& alpha : parts) {
            if (pick(rng)) f.add(sigma, alpha, random_nonzero_rational(rng));
        }
    }
    if (f.is_zero()) {
        std::uniform_int_distribution<std::size_t> ps(0, perms.size() - 1);
        std::uniform_int_distribution<std::size_t> as(0, parts.size() - 1);
        f.add(perms[ps(rng)], parts[as(rng)], random_nonzero_rational(rng));
    }
    return f;
}

}  // namespace pw
