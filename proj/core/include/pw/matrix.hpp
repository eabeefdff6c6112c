#ifndef PW_MATRIX_HPP
#define PW_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pw/errors.hpp"
#include "pw/field.hpp"
#include "pw/rational.hpp"

namespace pw {

/// Dense square matrix over a field. Indices are 0-based; equality is exact
/// entrywise equality.
template <Field F>
class Matrix {
public:
    using value_type = F;

    Matrix() = default;
    explicit Matrix(std::size_t size) : size_(size), data_(size * size, F::zero()) {}

    static Matrix zero(std::size_t size) { return Matrix(size); }

    static Matrix identity(std::size_t size) {
        Matrix m(size);
        for (std::size_t i = 0; i < size; ++i) m(i, i) = F::one();
        return m;
    }

    /// Matrix unit e_{ij}, 0-based.
    static Matrix unit(std::size_t size, std::size_t i, std::size_t j) {
        if (i >= size || j >= size) throw DimensionError("matrix unit index out of range");
        Matrix m(size);
        m(i, j) = F::one();
        return m;
    }

    static Matrix diagonal(std::span<const F> entries) {
        Matrix m(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
        Matrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) {
                throw DimensionError("matrix rows must form a square array");
            }
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<F>> rows) {
        std::vector<std::vector<F>> v;
        for (const auto& r : rows) v.emplace_back(r);
        return from_rows(v);
    }

    std::size_t size() const { return size_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

    std::vector<F> row(std::size_t i) const {
        return std::vector<F>(data_.begin() + i * size_, data_.begin() + (i + 1) * size_);
    }

    F trace() const {
        F t = F::zero();
        for (std::size_t i = 0; i < size_; ++i) t = t + (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    bool is_hollow() const {
        for (std::size_t i = 0; i < size_; ++i) {
            if (!(*this)(i, i).is_zero()) return false;
        }
        return true;
    }

    /// True when the matrix is c*I for some scalar c.
    bool is_scalar() const {
        for (std::size_t i = 0; i < size_; ++i) {
            for (std::size_t j = 0; j < size_; ++j) {
                if (i == j ? !((*this)(i, i) == (*this)(0, 0)) : !(*this)(i, j).is_zero()) {
                    return false;
                }
            }
        }
        return true;
    }

    std::size_t nonzero_count() const {
        std::size_t c = 0;
        for (const auto& x : data_) c += x.is_zero() ? 0 : 1;
        return c;
    }

    /// The `block`-sized submatrix whose top-left corner is at (bi*block, bj*block).
    Matrix block(std::size_t bi, std::size_t bj, std::size_t block) const {
        if ((bi + 1) * block > size_ || (bj + 1) * block > size_) {
            throw DimensionError("block index out of range");
        }
        Matrix m(block);
        for (std::size_t i = 0; i < block; ++i) {
            for (std::size_t j = 0; j < block; ++j) m(i, j) = (*this)(bi * block + i, bj * block + j);
        }
        return m;
    }

    void set_block(std::size_t bi, std::size_t bj, const Matrix& b) {
        const std::size_t bs = b.size();
        if ((bi + 1) * bs > size_ || (bj + 1) * bs > size_) {
            throw DimensionError("block index out of range");
        }
        for (std::size_t i = 0; i < bs; ++i) {
            for (std::size_t j = 0; j < bs; ++j) (*this)(bi * bs + i, bj * bs + j) = b(i, j);
        }
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_size(o, "addition");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] + o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        require_same_size(o, "subtraction");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = data_[k] - o.data_[k];
        return *this;
    }

    Matrix& operator*=(const F& c) {
        if (c.is_zero()) {
            for (auto& x : data_) x = F::zero();
            return *this;
        }
        for (auto& x : data_) {
            if (!x.is_zero()) x = x * c;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const F& c) { return a *= c; }
    friend Matrix operator*(const F& c, Matrix a) { return a *= c; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) {
            if (!x.is_zero()) x = -x;
        }
        return a;
    }

    /// Row-times-row product skipping zero entries; witness matrices are
    /// mostly block-sparse.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.require_same_size(b, "multiplication");
        const std::size_t n = a.size_;
        Matrix c(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                const F& ail = a(i, l);
                if (ail.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const F& blj = b(l, j);
                    if (blj.is_zero()) continue;
                    accumulate(c(i, j), ail, blj);
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.size_ == b.size_ && a.data_ == b.data_;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < size_; ++i) {
            os << (i == 0 ? "[" : " ");
            for (std::size_t j = 0; j < size_; ++j) os << (j == 0 ? "[" : ", ") << (*this)(i, j);
            os << "]" << (i + 1 == size_ ? "]" : "\n");
        }
        if (size_ == 0) os << "[]";
        return os.str();
    }

private:
    static void accumulate(F& target, const F& x, const F& y) {
        if constexpr (requires { target.add_product(x, y); }) {
            target.add_product(x, y);
        } else {
            target = target + x * y;
        }
    }

    void require_same_size(const Matrix& o, const char* op) const {
        if (size_ != o.size_) {
            throw DimensionError(std::string("size mismatch in matrix ") + op + ": " +
                                 std::to_string(size_) + " vs " + std::to_string(o.size_));
        }
    }

    std::size_t size_ = 0;
    std::vector<F> data_;
};

template <Field F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m) {
    return os << m.to_string();
}

using QMatrix = Matrix<Rational>;

/// ab - ba.
template <Field F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.size() != b.size()) throw DimensionError("size mismatch in commutator");
    return a * b - b * a;
}

/// Right-nested bracket [u_1, [u_2, [..., [u_m, x]]]]; returns x for empty `us`.
template <Field F>
Matrix<F> iterated_commutator(std::span<const Matrix<F>> us, const Matrix<F>& x) {
    Matrix<F> acc = x;
    for (auto it = us.rbegin(); it != us.rend(); ++it) acc = commutator(*it, acc);
    return acc;
}

template <Field F>
Matrix<F> iterated_commutator(const std::vector<Matrix<F>>& us, const Matrix<F>& x) {
    return iterated_commutator(std::span<const Matrix<F>>(us), x);
}

/// The cyclic shift on k+1 blocks, each an identity of size `block`:
/// identity blocks at block positions (i, i+1) and (k, 0).
template <Field F = Rational>
Matrix<F> cyclic_shift(std::size_t k, std::size_t block) {
    if (block == 0) throw DimensionError("cyclic_shift block size must be positive");
    const std::size_t blocks = k + 1;
    Matrix<F> v(blocks * block);
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t to = (b + 1) % blocks;
        for (std::size_t i = 0; i < block; ++i) v(b * block + i, to * block + i) = F::one();
    }
    return v;
}

/// Places `a` in the top-left corner of an s x s zero matrix.
template <Field F>
Matrix<F> embed(const Matrix<F>& a, std::size_t s) {
    if (s < a.size()) {
        throw DimensionError("cannot embed a " + std::to_string(a.size()) + "x" +
                             std::to_string(a.size()) + " matrix into size " + std::to_string(s));
    }
    Matrix<F> m(s);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a(i, j);
    }
    return m;
}

/// Identifies M_{k+1}(M_s) with M_{(k+1)s}.
template <Field F>
Matrix<F> block_flatten(const std::vector<std::vector<Matrix<F>>>& blocks) {
    const std::size_t nb = blocks.size();
    if (nb == 0) throw DimensionError("empty block grid");
    const std::size_t bs = blocks[0].empty() ? 0 : blocks[0][0].size();
    for (const auto& row : blocks) {
        if (row.size() != nb) throw DimensionError("block grid must be square");
        for (const auto& b : row) {
            if (b.size() != bs) throw DimensionError("ragged block sizes in block grid");
        }
    }
    Matrix<F> m(nb * bs);
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = 0; j < nb; ++j) m.set_block(i, j, blocks[i][j]);
    }
    return m;
}

/// diag(a, a, ..., a) with `copies` blocks, i.e. a (x) I read blockwise.
template <Field F>
Matrix<F> block_diagonal_repeat(const Matrix<F>& a, std::size_t copies) {
    Matrix<F> m(a.size() * copies);
    for (std::size_t b = 0; b < copies; ++b) m.set_block(b, b, a);
    return m;
}

template <Field F>
Matrix<F> matrix_power(const Matrix<F>& a, unsigned exponent) {
    Matrix<F> result = Matrix<F>::identity(a.size());
    for (unsigned i = 0; i < exponent; ++i) result = result * a;
    return result;
}

/// Reduces `work` to row echelon form in place and returns the pivot columns.
/// Pivot choice: first nonzero entry at or below the current row.
template <Field F>
std::vector<std::size_t> row_echelon(std::vector<std::vector<F>>& work, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < work.size(); ++col) {
        std::size_t p = row;
        while (p < work.size() && work[p][col].is_zero()) ++p;
        if (p == work.size()) continue;
        std::swap(work[row], work[p]);
        const F inv = work[row][col].inverse();
        for (std::size_t j = col; j < work[row].size(); ++j) {
            if (!work[row][j].is_zero()) work[row][j] = work[row][j] * inv;
        }
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r == row || work[r][col].is_zero()) continue;
            const F factor = work[r][col];
            for (std::size_t j = col; j < work[r].size(); ++j) {
                if (!work[row][j].is_zero()) work[r][j] = work[r][j] - factor * work[row][j];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <Field F>
std::size_t rank(const Matrix<F>& a) {
    std::vector<std::vector<F>> work;
    for (std::size_t i = 0; i < a.size(); ++i) work.push_back(a.row(i));
    return row_echelon(work, a.size()).size();
}

/// Exact Gauss-Jordan inverse. Throws SingularMatrixError.
template <Field F>
Matrix<F> inverse(const Matrix<F>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<F>> work;
    for (std::size_t i = 0; i < n; ++i) {
        auto r = a.row(i);
        r.resize(2 * n, F::zero());
        r[n + i] = F::one();
        work.push_back(std::move(r));
    }
    const auto pivots = row_echelon(work, n);
    if (pivots.size() != n) throw SingularMatrixError("matrix is singular");
    Matrix<F> inv(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = work[i][n + j];
    }
    return inv;
}

/// p a p^{-1}.
template <Field F>
Matrix<F> similarity(const Matrix<F>& p, const Matrix<F>& a) {
    if (p.size() != a.size()) throw DimensionError("size mismatch in similarity");
    return p * a * inverse(p);
}

}  // namespace pw

#endif  // PW_MATRIX_HPP
