#include "pw/partition.hpp"

#include <algorithm>

#include "pw/errors.hpp"

namespace pw {

namespace {

std::string seq_to_string(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

OmegaSet::OmegaSet(std::vector<int> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
        throw PreconditionError("omega set has repeated elements");
    }
}

bool OmegaSet::contains(int w) const {
    return std::binary_search(elements_.begin(), elements_.end(), w);
}

void OmegaSet::require_disjoint_from_variables(int n) const {
    if (!elements_.empty() && elements_.front() <= n) {
        throw PreconditionError("omega element " + std::to_string(elements_.front()) +
                                " collides with variable indices 1.." + std::to_string(n));
    }
}

OmegaSet OmegaSet::without(const std::vector<int>& removed) const {
    std::vector<int> out;
    for (int w : elements_) {
        if (std::find(removed.begin(), removed.end(), w) == removed.end()) out.push_back(w);
    }
    return OmegaSet(std::move(out));
}

OmegaSet OmegaSet::with(int added) const {
    auto v = elements_;
    v.push_back(added);
    return OmegaSet(std::move(v));
}

std::string OmegaSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(elements_[i]);
    }
    return s + "}";
}

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    std::vector<int> all;
    for (const auto& p : parts_) {
        for (std::size_t i = 1; i < p.size(); ++i) {
            if (p[i - 1] >= p[i]) throw PreconditionError("partition part not strictly increasing");
        }
        all.insert(all.end(), p.begin(), p.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw PreconditionError("partition parts are not disjoint");
    }
}

OmegaSet Partition::support() const {
    std::vector<int> all;
    for (const auto& p : parts_) all.insert(all.end(), p.begin(), p.end());
    return OmegaSet(std::move(all));
}

bool Partition::partitions(const OmegaSet& omega) const { return support() == omega; }

int Partition::part_containing(int w) const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (std::find(parts_[i].begin(), parts_[i].end(), w) != parts_[i].end()) {
            return static_cast<int>(i) + 1;
        }
    }
    return 0;
}

Partition Partition::truncated(int count) const {
    return Partition(std::vector<Part>(parts_.begin(), parts_.begin() + count));
}

Partition Partition::extended(Part part) const {
    auto v = parts_;
    v.push_back(std::move(part));
    return Partition(std::move(v));
}

Partition Partition::with_inserted_front(int i, int w) const {
    auto v = parts_;
    auto& p = v.at(static_cast<std::size_t>(i - 1));
    p.insert(p.begin(), w);
    return Partition(std::move(v));
}

Partition Partition::with_removed(int i, int w) const {
    auto v = parts_;
    auto& p = v.at(static_cast<std::size_t>(i - 1));
    p.erase(std::remove(p.begin(), p.end(), w), p.end());
    return Partition(std::move(v));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += parts_[i].empty() ? std::string("()") : seq_to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> enumerate_partitions(const OmegaSet& omega, int n) {
    if (n < 1) throw PreconditionError("number of parts must be positive");
    const auto& elems = omega.elements();
    const std::size_t m = elems.size();
    std::vector<int> assign(m, 0);
    std::vector<Partition> out;
    while (true) {
        std::vector<Partition::Part> parts(static_cast<std::size_t>(n));
        for (std::size_t t = 0; t < m; ++t) parts[static_cast<std::size_t>(assign[t])].push_back(elems[t]);
        out.emplace_back(std::move(parts));
        std::size_t t = m;
        while (t > 0) {
            --t;
            if (++assign[t] < n) break;
            assign[t] = 0;
            if (t == 0) return out;
        }
        if (m == 0) return out;
    }
}

}  // namespace pw
