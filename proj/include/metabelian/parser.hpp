#pragma once

#include <string_view>
#include <variant>

#include "metabelian/canonical.hpp"
#include "metabelian/poly.hpp"
#include "metabelian/wreath.hpp"

namespace metab {

// Input language (whitespace insignificant):
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power ('*' power)*
//   power   := primary ('^' INT)?
//   primary := RATIONAL | SYMBOL | 'u(' INT ',' INT ')' | 'w(' INT ',' INT ')'
//            | '(' expr ')' | '[' expr (',' expr)+ ']'
//   SYMBOL  := ('x'|'y'|'a'|'b'|'p'|'q') INT
//   RATIONAL:= INT ('/' INT)?
//
// Brackets are left-normed, [e1,e2,e3] = [[e1,e2],e3].  Inside a bracket a
// bare x_i / y_i is a Lie generator; outside, x_i / y_i multiplying a
// bracket act through ad.

using ParsedValue = std::variant<Poly, FormalScalar, FormalModuleElement, WreathElement, LieExpr>;

/// Parses and picks the narrowest reading: LieExpr when brackets over x, y
/// only; FormalModuleElement for a/w-headed products of x and u; FormalScalar
/// for products of x and u; Poly for x, y; WreathElement otherwise.
ParsedValue parse_expr(std::string_view src, int d);

Poly parse_poly(std::string_view src, int d);
FormalScalar parse_scalar(std::string_view src, int d);
FormalModuleElement parse_module(std::string_view src, int d);
WreathElement parse_wreath(std::string_view src, int d);
LieExpr parse_lie(std::string_view src, int d);

}  // namespace metab
