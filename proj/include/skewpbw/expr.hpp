#ifndef SKEWPBW_EXPR_HPP
#define SKEWPBW_EXPR_HPP

#include <string>

#include "skewpbw/pbw.hpp"

namespace skewpbw {

/// Shared textual syntax for elements, coefficient polynomials and scalars:
///   expr   := '-'? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := number | ident ('^' nat)? | '(' expr ')'
///   number := nat ('/' nat)?
/// Whitespace insensitive. SyntaxError carries the 1-based position.

/// Evaluates src in A. Identifiers may be ring generators or variables;
/// out-of-order variable products are normalized through the algebra's
/// multiplication (so "x2*x1" picks up the commutation scalar).
PbwElement parse_element(const std::string& src, const AlgebraHandle& algebra);

/// Evaluates src in R alone; variables are not in scope here.
CoeffPoly parse_ring_poly(const std::string& src, const std::shared_ptr<const PolyRing>& ring);

/// Evaluates a constant expression over the given field; any identifier is
/// an UnknownIdentifier error.
Scalar parse_scalar_expr(const std::string& src, const Field& field);

}  // namespace skewpbw

#endif
