#include "pw/pc_poly.hpp"

#include <algorithm>
#include <utility>

#include "pw/errors.hpp"
#include "pw/linsolve.hpp"

namespace pw {

namespace {

UMonomial merge(const UMonomial& a, const UMonomial& b) {
    UMonomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct BasisExpansion {
    std::vector<AdmissibleKey> keys;
    std::vector<PCPoly> expansions;
};

BasisExpansion expand_basis(int n, const OmegaSet& omega) {
    BasisExpansion out;
    const auto partitions = enumerate_partitions(omega, n);
    for (const auto& sigma : Permutation::all(n)) {
        for (const auto& alpha : partitions) {
            AdmissiblePoly single(n, omega);
            single.add(sigma, alpha, Rational::one());
            out.keys.push_back(AdmissibleKey{sigma, alpha});
            out.expansions.push_back(expand_admissible(single));
        }
    }
    return out;
}

}  // namespace

NormalWord NormalWord::letter(int i) {
    NormalWord w;
    w.letters_.push_back(i);
    w.monomials_.emplace_back();
    return w;
}

NormalWord NormalWord::u(int w) {
    NormalWord word;
    word.monomials_[0].push_back(w);
    return word;
}

NormalWord operator*(const NormalWord& a, const NormalWord& b) {
    NormalWord out;
    out.letters_ = a.letters_;
    out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
    out.monomials_.assign(a.monomials_.begin(), a.monomials_.end() - 1);
    out.monomials_.push_back(merge(a.monomials_.back(), b.monomials_.front()));
    out.monomials_.insert(out.monomials_.end(), b.monomials_.begin() + 1, b.monomials_.end());
    return out;
}

std::string NormalWord::to_string() const {
    std::vector<std::string> factors;
    for (std::size_t t = 0; t < monomials_.size(); ++t) {
        for (int w : monomials_[t]) factors.push_back("U" + std::to_string(w));
        if (t < letters_.size()) factors.push_back("X" + std::to_string(letters_[t]));
    }
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i];
    return s;
}

PCPoly::PCPoly(int n, OmegaSet omega) : n_(n), omega_(std::move(omega)) {}

PCPoly PCPoly::constant(int n, OmegaSet omega, const Rational& c) {
    PCPoly p(n, std::move(omega));
    p.add(NormalWord{}, c);
    return p;
}

PCPoly PCPoly::letter(int n, OmegaSet omega, int i) {
    if (i < 1 || i > n) throw ArityError("variable X" + std::to_string(i) + " out of range");
    PCPoly p(n, std::move(omega));
    p.add(NormalWord::letter(i), Rational::one());
    return p;
}

PCPoly PCPoly::u(int n, OmegaSet omega, int w) {
    if (!omega.contains(w)) throw ArityError("U" + std::to_string(w) + " not in omega");
    PCPoly p(n, std::move(omega));
    p.add(NormalWord::u(w), Rational::one());
    return p;
}

void PCPoly::add(const NormalWord& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void PCPoly::require_compatible(const PCPoly& o) const {
    if (o.n_ != n_ || !(o.omega_ == omega_)) {
        throw PreconditionError("partially commutative polynomials over different (n, omega)");
    }
}

PCPoly& PCPoly::operator+=(const PCPoly& o) {
    require_compatible(o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

PCPoly& PCPoly::operator-=(const PCPoly& o) {
    require_compatible(o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

PCPoly& PCPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

PCPoly operator*(const PCPoly& a, const PCPoly& b) {
    a.require_compatible(b);
    PCPoly out(a.n_, a.omega_);
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) out.add(wa * wb, ca * cb);
    }
    return out;
}

std::string PCPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")*" + w.to_string();
    }
    return s;
}

PCPoly expand_bracket(int n, const OmegaSet& omega, int i, const Partition::Part& part) {
    PCPoly acc = PCPoly::letter(n, omega, i);
    for (auto it = part.rbegin(); it != part.rend(); ++it) {
        const PCPoly uw = PCPoly::u(n, omega, *it);
        acc = uw * acc - acc * uw;
    }
    return acc;
}

PCPoly expand_admissible(const AdmissiblePoly& f) {
    const int n = f.arity();
    const OmegaSet& omega = f.omega();
    std::map<std::pair<int, Partition::Part>, PCPoly> brackets;
    auto bracket = [&](int i, const Partition::Part& part) -> const PCPoly& {
        auto key = std::make_pair(i, part);
        auto it = brackets.find(key);
        if (it == brackets.end()) {
            it = brackets.emplace(std::move(key), expand_bracket(n, omega, i, part)).first;
        }
        return it->second;
    };

    PCPoly out(n, omega);
    for (const auto& [key, c] : f.coeffs()) {
        PCPoly term = PCPoly::constant(n, omega, c);
        for (int t = 1; t <= n; ++t) {
            const int i = key.sigma(t);
            term = term * bracket(i, key.alpha.part(i));
        }
        out += term;
    }
    return out;
}

AdmissiblePoly extract_coefficients(const PCPoly& p, int n, const OmegaSet& omega) {
    if (p.arity() != n || !(p.omega() == omega)) {
        throw PreconditionError("polynomial is not over the requested (n, omega)");
    }
    AdmissiblePoly result(n, omega);
    if (p.is_zero()) return result;

    const auto basis = expand_basis(n, omega);
    std::map<NormalWord, std::size_t> row_of;
    for (const auto& e : basis.expansions) {
        for (const auto& [w, c] : e.terms()) row_of.try_emplace(w, row_of.size());
    }
    for (const auto& [w, c] : p.terms()) {
        if (!row_of.contains(w)) {
            throw NotAdmissibleError("word " + w.to_string() +
                                     " does not occur in any admissible basis element");
        }
    }

    const std::size_t cols = basis.keys.size();
    std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(cols));
    for (std::size_t col = 0; col < cols; ++col) {
        for (const auto& [w, c] : basis.expansions[col].terms()) a[row_of.at(w)][col] = c;
    }
    std::vector<Rational> b(row_of.size());
    for (const auto& [w, c] : p.terms()) b[row_of.at(w)] = c;

    const auto solved = solve_exact(std::move(a), b, cols);
    if (!solved.solution) {
        throw NotAdmissibleError("polynomial is not in the span of the admissible basis");
    }
    if (!solved.full_column_rank()) {
        throw InvariantViolation("admissible basis expansions are linearly dependent");
    }
    for (std::size_t col = 0; col < cols; ++col) {
        result.add(basis.keys[col].sigma, basis.keys[col].alpha, (*solved.solution)[col]);
    }
    return result;
}

BasisRank admissible_basis_rank(int n, const OmegaSet& omega) {
    const auto basis = expand_basis(n, omega);
    std::map<NormalWord, std::size_t> row_of;
    for (const auto& e : basis.expansions) {
        for (const auto& [w, c] : e.terms()) row_of.try_emplace(w, row_of.size());
    }
    const std::size_t cols = basis.keys.size();
    std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(cols));
    for (std::size_t col = 0; col < cols; ++col) {
        for (const auto& [w, c] : basis.expansions[col].terms()) a[row_of.at(w)][col] = c;
    }
    const auto solved = solve_exact(std::move(a), std::vector<Rational>(row_of.size()), cols);
    return BasisRank{solved.rank, cols, row_of.size()};
}

}  // namespace pw
