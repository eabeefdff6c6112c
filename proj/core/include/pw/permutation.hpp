#ifndef PW_PERMUTATION_HPP
#define PW_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace pw {

/// A bijection of {1..n} stored as its image sequence (sigma(1), ..., sigma(n)).
/// It doubles as the word X_{sigma(1)} ... X_{sigma(n)}.
class Permutation {
public:
    Permutation() = default;
    /// Throws PreconditionError unless `images` is a bijection of {1..n}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// All of S_n in lexicographic order of image sequences.
    static std::vector<Permutation> all(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    /// sigma(i) for 1-based i.
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const { return images_; }

    /// 1-based position j with sigma(j) == value.
    int position_of(int value) const;
    int sign() const;
    std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

}  // namespace pw

#endif  // PW_PERMUTATION_HPP
