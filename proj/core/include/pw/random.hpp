#ifndef PW_RANDOM_HPP
#define PW_RANDOM_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "pw/admissible.hpp"
#include "pw/matrix.hpp"
#include "pw/multilinear.hpp"

namespace pw {

inline constexpr std::uint64_t kDefaultSeed = 20240521;

/// Explicit flag, else the PW_SEED environment variable, else kDefaultSeed.
/// Throws PreconditionError if PW_SEED is not an unsigned integer.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

using Rng = std::mt19937_64;

/// Small nonzero rational: numerator in [-4, 4] \ {0}, denominator in {1, 2, 3}.
Rational random_nonzero_rational(Rng& rng);
/// Zero with probability `zero_probability`, else random_nonzero_rational.
Rational random_rational(Rng& rng, double zero_probability = 0.3);

/// Each permutation of S_n gets a nonzero coefficient with probability
/// `density`; at least one does unless density == 0.
MultilinearPoly random_multilinear(int n, double density, std::uint64_t seed);
MultilinearPoly random_multilinear(int n, double density, Rng& rng);

/// Random d x d matrix with exact trace zero; the last diagonal entry is
/// minus the sum of the others. d == 1 gives the zero matrix.
QMatrix random_trace_zero(std::size_t d, std::uint64_t seed);
QMatrix random_trace_zero(std::size_t d, Rng& rng);

QMatrix random_matrix(std::size_t s, Rng& rng, double zero_probability = 0.3);

/// `count` pairwise commuting matrices: random polynomials in one random
/// matrix.
std::vector<QMatrix> random_commuting_family(std::size_t s, std::size_t count, Rng& rng);

/// Random admissible polynomial over (n, omega); nonzero unless density == 0.
AdmissiblePoly random_admissible(int n, const OmegaSet& omega, double density, Rng& rng);

}  // namespace pw

#endif  // PW_RANDOM_HPP
