#ifndef PW_FIELD_HPP
#define PW_FIELD_HPP

#include <concepts>
#include <cstdint>

namespace pw {

/// Contract every scalar backend satisfies. Elements are values; `inverse`
/// throws on zero. `characteristic()` is 0 for the rationals.
template <class F>
concept Field = std::regular<F> && requires(const F a, const F b) {
    { F::zero() } -> std::same_as<F>;
    { F::one() } -> std::same_as<F>;
    { F::from_int(std::int64_t{}) } -> std::same_as<F>;
    { F::characteristic() } -> std::convertible_to<std::uint64_t>;
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.inverse() } -> std::same_as<F>;
    { a.is_zero() } -> std::same_as<bool>;
};

}  // namespace pw

#endif  // PW_FIELD_HPP
