#pragma once

// Seeded random generators and relation builders shared by the unit tests
// and the acceptance runner.

#include <random>

#include "metabelian/canonical.hpp"
#include "metabelian/poly.hpp"
#include "metabelian/wreath.hpp"

namespace metab::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng) {
  int num = 0;
  while (num == 0) num = uniform(rng, -5, 5);
  const int den = uniform(rng, 1, 3);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Variable random_variable(Rng& rng, int d) {
  const int i = uniform(rng, 1, d);
  return uniform(rng, 0, 1) ? xvar(i) : yvar(i);
}

inline Monomial random_monomial(Rng& rng, int d, int degree) {
  Monomial m(d);
  for (int k = 0; k < degree; ++k) m = m * Monomial::of(d, random_variable(rng, d));
  return m;
}

/// Up to `terms` terms of degree at most `max_degree`; may be zero.
inline Poly random_poly(Rng& rng, int d, int terms = 4, int max_degree = 3) {
  Poly p(d);
  const int t = uniform(rng, 0, terms);
  for (int k = 0; k < t; ++k) p.add_term(random_monomial(rng, d, uniform(rng, 0, max_degree)), small_rational(rng));
  return p;
}

inline Poly random_homogeneous(Rng& rng, int d, int degree, int terms = 4) {
  Poly p(d);
  const int t = uniform(rng, 1, terms);
  for (int k = 0; k < t; ++k) p.add_term(random_monomial(rng, d, degree), small_rational(rng));
  return p;
}

inline WreathElement random_module_element(Rng& rng, int d, int generators = 3) {
  WreathElement w(d);
  const int t = uniform(rng, 0, generators);
  for (int k = 0; k < t; ++k) {
    const int i = uniform(rng, 1, d);
    w.add(uniform(rng, 0, 1) ? agen(i) : bgen(i), random_poly(rng, d, 3, 2));
  }
  return w;
}

inline WreathElement random_wreath(Rng& rng, int d) {
  WreathElement w = random_module_element(rng, d);
  const int t = uniform(rng, 0, 2);
  for (int k = 0; k < t; ++k) {
    const int i = uniform(rng, 1, d);
    w.add(uniform(rng, 0, 1) ? pgen(i) : qgen(i), small_rational(rng));
  }
  return w;
}

/// Sum of bracket words of length 1..4, the longer ones with random
/// multipliers.
inline LieExpr random_lie(Rng& rng, int d, int terms = 3) {
  LieExpr e(d);
  const int t = uniform(rng, 1, terms);
  for (int k = 0; k < t; ++k) {
    const int len = uniform(rng, 1, 4);
    std::vector<Variable> word;
    for (int j = 0; j < len; ++j) word.push_back(random_variable(rng, d));
    LieExpr w = LieExpr::word(d, word, small_rational(rng));
    if (len >= 2 && uniform(rng, 0, 2) == 0) w *= random_poly(rng, d, 2, 2) + Poly::constant(d, 1);
    e += w;
  }
  return e;
}

inline UGen random_u(Rng& rng, int d) {
  const int p = uniform(rng, 1, d - 1);
  return UGen(p, uniform(rng, p + 1, d));
}

/// Product of `factors` factors x_i / u_pq (x only when d = 1).
inline ConstantWord random_constant_word(Rng& rng, int d, int factors) {
  std::vector<int> xs;
  std::vector<UGen> us;
  for (int k = 0; k < factors; ++k) {
    if (d >= 2 && uniform(rng, 0, 1))
      us.push_back(random_u(rng, d));
    else
      xs.push_back(uniform(rng, 1, d));
  }
  return ConstantWord(std::move(xs), std::move(us));
}

inline FormalScalar random_formal_scalar(Rng& rng, int d, int max_factors = 6, int terms = 3) {
  FormalScalar e(d);
  const int t = uniform(rng, 1, terms);
  for (int k = 0; k < t; ++k) e.add(random_constant_word(rng, d, uniform(rng, 0, max_factors)), small_rational(rng));
  return e;
}

/// Head-times-tail words with at most `max_factors` factors in total.
inline FormalModuleElement random_formal_module(Rng& rng, int d, int max_factors = 6, int terms = 3) {
  FormalModuleElement e(d);
  const int t = uniform(rng, 1, terms);
  for (int k = 0; k < t; ++k) {
    ModuleHead head = AHead{uniform(rng, 1, d)};
    if (uniform(rng, 0, 1)) head = WGen{uniform(rng, 1, d), uniform(rng, 1, d)};
    e.add(ModuleWord{head, random_constant_word(rng, d, uniform(rng, 0, max_factors - 1))}, small_rational(rng));
  }
  return e;
}

// --- the defining relations, with u_ij = -u_ji and u_ii = 0 -------------------

inline Poly u_signed(int d, int i, int j) {
  if (i == j) return Poly(d);
  return i < j ? expand_u(d, UGen(i, j)) : -expand_u(d, UGen(j, i));
}

inline WreathElement w_elem(int d, int i, int j) { return expand_w(d, WGen{i, j}); }

/// x_i u_jk - x_j u_ik + x_k u_ij
inline Poly relation_s1(int d, int i, int j, int k) {
  return Poly::x(d, i) * u_signed(d, j, k) - Poly::x(d, j) * u_signed(d, i, k) + Poly::x(d, k) * u_signed(d, i, j);
}

/// u_ij u_kl - u_ik u_jl + u_il u_jk
inline Poly relation_r1(int d, int i, int j, int k, int l) {
  return u_signed(d, i, j) * u_signed(d, k, l) - u_signed(d, i, k) * u_signed(d, j, l) +
         u_signed(d, i, l) * u_signed(d, j, k);
}

/// a_i u_jk - w_ik x_j + w_ij x_k
inline WreathElement relation_s2(int d, int i, int j, int k) {
  return module_action(WreathElement::module(d, agen(i)), u_signed(d, j, k)) -
         module_action(w_elem(d, i, k), Poly::x(d, j)) + module_action(w_elem(d, i, j), Poly::x(d, k));
}

/// w_ij u_kl - w_ik u_jl + w_il u_jk
inline WreathElement relation_r2(int d, int i, int j, int k, int l) {
  return module_action(w_elem(d, i, j), u_signed(d, k, l)) - module_action(w_elem(d, i, k), u_signed(d, j, l)) +
         module_action(w_elem(d, i, l), u_signed(d, j, k));
}

}  // namespace metab::testing
