#ifndef PW_WITNESS_HPP
#define PW_WITNESS_HPP

#include <cstddef>
#include <map>

#include "pw/matrix.hpp"

namespace pw {

/// Concrete matrices for the noncommuting variables X_i (keyed by i) and the
/// commuting variables U_w (keyed by w), all of one size.
class WitnessAssignment {
public:
    explicit WitnessAssignment(std::size_t size = 0) : size_(size) {}

    std::size_t size() const { return size_; }

    void set_x(int i, QMatrix m);
    void set_u(int w, QMatrix m);

    bool has_x(int i) const { return x_.contains(i); }
    bool has_u(int w) const { return u_.contains(w); }
    /// Throws ArityError when absent.
    const QMatrix& x(int i) const;
    const QMatrix& u(int w) const;

    const std::map<int, QMatrix>& xs() const { return x_; }
    const std::map<int, QMatrix>& us() const { return u_; }

    bool u_commute() const;
    /// Throws CommutativityError naming the first non-commuting pair.
    void require_u_commute() const;

    friend bool operator==(const WitnessAssignment&, const WitnessAssignment&) = default;

private:
    void require_size(const QMatrix& m) const;

    std::size_t size_;
    std::map<int, QMatrix> x_;
    std::map<int, QMatrix> u_;
};

}  // namespace pw

#endif  // PW_WITNESS_HPP
