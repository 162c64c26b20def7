#include "metabelian/weitzenbock.hpp"

namespace metab {

Poly delta(const Poly& p) {
  const int d = p.rank();
  Poly r(d);
  for (int i = 1; i <= d; ++i) r += Poly::x(d, i) * p.derivative(yvar(i));
  return r;
}

WreathElement delta(const WreathElement& w) {
  const int d = w.rank();
  WreathElement r(d);
  for (const auto& [g, f] : w.cpart()) {
    r.add(g, delta(f));
    if (g.kind == ModuleKind::B) r.add(agen(g.index), f);
  }
  for (const auto& [g, c] : w.lpart())
    if (g.kind == LinearKind::Q) r.add(pgen(g.index), c);
  return r;
}

LieExpr delta(const LieExpr& e) {
  const int d = e.rank();
  LieExpr r(d);
  for (const auto& t : e.terms()) {
    for (std::size_t k = 0; k < t.word.size(); ++k) {
      if (t.word[k].kind != VarKind::Y) continue;
      auto w = t.word;
      w[k] = xvar(w[k].index);
      r.add_term({t.coefficient, std::move(w), t.multiplier});
    }
    if (t.word.size() >= 2) {
      Poly df = delta(t.multiplier);
      if (!df.is_zero()) r.add_term({t.coefficient, t.word, std::move(df)});
    }
  }
  return r;
}

bool is_constant(const Poly& p) { return delta(p).is_zero(); }

bool is_constant(const WreathElement& w) { return delta(w).is_zero(); }

Poly shift_action(const Poly& p, const Rational& alpha) {
  const int d = p.rank();
  std::map<Variable, Poly> images = identity_substitution(d);
  for (int i = 1; i <= d; ++i) images.at(yvar(i)) = Poly::y(d, i) + Poly::x(d, i) * alpha;
  return substitute(p, images);
}

}  // namespace metab
