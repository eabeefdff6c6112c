#include "pw/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "pw/errors.hpp"

namespace pw {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw PreconditionError("not a permutation: " + to_string());
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

int Permutation::position_of(int value) const {
    const auto it = std::find(images_.begin(), images_.end(), value);
    if (it == images_.end()) throw RangeError("value not in permutation");
    return static_cast<int>(it - images_.begin()) + 1;
}

int Permutation::sign() const {
    int inversions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (std::size_t j = i + 1; j < images_.size(); ++j) inversions += images_[i] > images_[j];
    }
    return inversions % 2 == 0 ? 1 : -1;
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(images_[i]);
    }
    return s + "]";
}

}  // namespace pw
