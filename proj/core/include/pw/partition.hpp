#ifndef PW_PARTITION_HPP
#define PW_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace pw {

/// Finite index set of commuting variables, kept strictly increasing.
class OmegaSet {
public:
    OmegaSet() = default;
    /// Sorts and validates: elements must be distinct.
    explicit OmegaSet(std::vector<int> elements);

    const std::vector<int>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    bool contains(int w) const;

    /// Throws PreconditionError unless every element exceeds n.
    void require_disjoint_from_variables(int n) const;

    OmegaSet without(const std::vector<int>& removed) const;
    OmegaSet with(int added) const;
    std::string to_string() const;

    friend auto operator<=>(const OmegaSet&, const OmegaSet&) = default;

private:
    std::vector<int> elements_;
};

/// An n-tuple of strictly increasing sequences (alpha^1, ..., alpha^n) that
/// together use every element of some Omega exactly once.
class Partition {
public:
    using Part = std::vector<int>;

    Partition() = default;
    /// Each part must be strictly increasing and parts must be disjoint.
    explicit Partition(std::vector<Part> parts);

    static Partition empty(int n) { return Partition(std::vector<Part>(static_cast<std::size_t>(n))); }

    int arity() const { return static_cast<int>(parts_.size()); }
    /// alpha^i for 1-based i.
    const Part& part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<Part>& parts() const { return parts_; }

    /// Union of all parts.
    OmegaSet support() const;
    bool partitions(const OmegaSet& omega) const;

    /// 1-based index of the part containing w, or 0.
    int part_containing(int w) const;

    /// The first `count` parts.
    Partition truncated(int count) const;
    /// Appends `part` as a new last component.
    Partition extended(Part part) const;
    /// Inserts w at the front of part i (1-based); w must precede every
    /// element already there.
    Partition with_inserted_front(int i, int w) const;
    /// Removes w from part i.
    Partition with_removed(int i, int w) const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<Part> parts_;
};

/// All partitions of `omega` into n labelled, possibly empty parts. Order:
/// assignments of omega's elements (smallest element most significant) to
/// parts 1..n, enumerated lexicographically. Exactly n^|omega| entries.
std::vector<Partition> enumerate_partitions(const OmegaSet& omega, int n);

}  // namespace pw

#endif  // PW_PARTITION_HPP
