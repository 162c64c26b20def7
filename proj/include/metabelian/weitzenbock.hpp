#pragma once

#include "metabelian/poly.hpp"
#include "metabelian/wreath.hpp"

namespace metab {

/// The derivation y_i -> x_i, x_i -> 0 on K[X_d,Y_d].
Poly delta(const Poly& p);

/// The same derivation on W: b_i -> a_i, q_i -> p_i, a_i, p_i -> 0, with
/// delta(a_i f) = a_i delta(f) and delta(b_i g) = a_i g + b_i delta(g).
WreathElement delta(const WreathElement& w);

/// Formal derivation of a bracket expression through its generators and
/// multipliers.
LieExpr delta(const LieExpr& e);

bool is_constant(const Poly& p);
bool is_constant(const WreathElement& w);

/// exp(alpha * delta): the substitution y_i -> y_i + alpha x_i.
Poly shift_action(const Poly& p, const Rational& alpha);

}  // namespace metab
