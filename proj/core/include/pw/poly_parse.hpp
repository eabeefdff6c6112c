#ifndef PW_POLY_PARSE_HPP
#define PW_POLY_PARSE_HPP

#include <string_view>

#include "pw/multilinear.hpp"

namespace pw {

/// Parses the text grammar
///   poly := term (('+'|'-') term)*
///   term := [rat '*'] var ('*' var)*
///   var  := 'X' int
///   rat  := int ['/' int]
/// (whitespace anywhere between tokens; an optional sign before the first
/// term). n is the largest variable index and every monomial must use each
/// of X1..Xn exactly once. Like monomials are combined, so the result may be
/// the zero polynomial; callers check is_zero().
///
/// Throws ParseError (with offset) on syntax errors and MultilinearityError
/// naming the offending monomial.
MultilinearPoly parse_poly(std::string_view text);

}  // namespace pw

#endif  // PW_POLY_PARSE_HPP
