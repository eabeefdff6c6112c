#include "pw/poly_parse.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "pw/errors.hpp"

namespace pw {

namespace {

struct RawTerm {
    Rational coeff;
    std::vector<int> vars;
    std::string text;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<RawTerm> parse() {
        std::vector<RawTerm> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
            skip_ws();
        }
        terms.push_back(term(negative));
        skip_ws();
        while (!at_end()) {
            const char op = get();
            if (op != '+' && op != '-') fail("expected '+' or '-'", pos_ - 1);
            skip_ws();
            terms.push_back(term(op == '-'));
            skip_ws();
        }
        return terms;
    }

private:
    RawTerm term(bool negative) {
        const std::size_t start = pos_;
        RawTerm t;
        t.coeff = Rational::one();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff = rational();
            skip_ws();
            if (get() != '*') fail("expected '*' after coefficient", pos_ - 1);
            skip_ws();
        }
        t.vars.push_back(var());
        std::size_t end = pos_;
        while (true) {
            const std::size_t save = pos_;
            skip_ws();
            if (peek() != '*') {
                pos_ = save;
                break;
            }
            ++pos_;
            skip_ws();
            t.vars.push_back(var());
            end = pos_;
        }
        if (negative) t.coeff = -t.coeff;
        t.text = std::string(text_.substr(start, end - start));
        return t;
    }

    Rational rational() {
        const std::size_t start = pos_;
        digits();
        if (peek() == '/') {
            ++pos_;
            const std::size_t den_start = pos_;
            digits();
            const auto den = text_.substr(den_start, pos_ - den_start);
            if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
                fail("zero denominator", den_start);
            }
        }
        return Rational::parse(text_.substr(start, pos_ - start));
    }

    int var() {
        const std::size_t start = pos_;
        if (get() != 'X') fail("expected variable 'X<index>'", start);
        const std::size_t digits_start = pos_;
        digits();
        const auto idx = text_.substr(digits_start, pos_ - digits_start);
        if (idx.size() > 6) fail("variable index too large", digits_start);
        const int v = std::stoi(std::string(idx));
        if (v < 1) fail("variable indices start at 1", digits_start);
        return v;
    }

    void digits() {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("expected digits", start);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() { return at_end() ? '\0' : text_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError("syntax error: " + msg, at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

MultilinearPoly parse_poly(std::string_view text) {
    const auto terms = Parser(text).parse();
    int n = 0;
    for (const auto& t : terms) n = std::max(n, *std::max_element(t.vars.begin(), t.vars.end()));

    MultilinearPoly f(n);
    for (const auto& t : terms) {
        auto sorted = t.vars;
        std::sort(sorted.begin(), sorted.end());
        bool ok = sorted.size() == static_cast<std::size_t>(n);
        for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == static_cast<int>(i) + 1;
        if (!ok) {
            throw MultilinearityError("monomial '" + t.text + "' does not use each of X1..X" +
                                      std::to_string(n) + " exactly once");
        }
        f.add(Permutation(t.vars), t.coeff);
    }
    return f;
}

}  // namespace pw
