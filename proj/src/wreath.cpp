#include "metabelian/wreath.hpp"

namespace metab {

namespace {

bool is_one(const Poly& f) { return f == Poly::constant(f.rank(), 1); }

/// Polynomial image of a Gamma component: p_j -> x_j, q_j -> y_j.
Poly linear_symbol(const WreathElement& w) {
  Poly r(w.rank());
  for (const auto& [g, c] : w.lpart()) {
    Variable v = g.kind == LinearKind::P ? xvar(g.index) : yvar(g.index);
    r += Poly::variable(w.rank(), v) * c;
  }
  return r;
}

WreathElement module_times(const WreathElement& w, const Poly& f) {
  WreathElement r(w.rank());
  if (f.is_zero()) return r;
  for (const auto& [g, coef] : w.cpart()) r.add(g, coef * f);
  return r;
}

}  // namespace

WreathElement::WreathElement(int d) : d_(d) { check_rank(d); }

WreathElement WreathElement::module(ModuleGenerator g, const Poly& f) {
  WreathElement w(f.rank());
  w.add(g, f);
  return w;
}

WreathElement WreathElement::linear(int d, LinearGenerator g, const Rational& c) {
  WreathElement w(d);
  w.add(g, c);
  return w;
}

Poly WreathElement::coefficient(ModuleGenerator g) const {
  auto it = cpart_.find(g);
  return it == cpart_.end() ? Poly(d_) : it->second;
}

Rational WreathElement::coefficient(LinearGenerator g) const {
  auto it = lpart_.find(g);
  return it == lpart_.end() ? Rational(0) : it->second;
}

void WreathElement::add(ModuleGenerator g, const Poly& f) {
  check_same_rank(d_, f.rank());
  check_index(d_, g.index);
  if (f.is_zero()) return;
  auto [it, inserted] = cpart_.try_emplace(g, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) cpart_.erase(it);
  }
}

void WreathElement::add(LinearGenerator g, const Rational& c) {
  check_index(d_, g.index);
  if (sgn(c) == 0) return;
  auto [it, inserted] = lpart_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) lpart_.erase(it);
  }
}

int WreathElement::degree() const {
  int deg = lpart_.empty() ? -1 : 1;
  for (const auto& [g, f] : cpart_) deg = std::max(deg, 1 + f.degree());
  return deg;
}

bool WreathElement::is_homogeneous() const {
  const int n = degree();
  return *this == homogeneous_part(n);
}

WreathElement WreathElement::homogeneous_part(int n) const {
  WreathElement r(d_);
  for (const auto& [g, f] : cpart_) r.add(g, f.homogeneous_part(n - 1));
  if (n == 1) r.lpart_ = lpart_;
  return r;
}

WreathElement& WreathElement::operator+=(const WreathElement& other) {
  check_same_rank(d_, other.d_);
  for (const auto& [g, f] : other.cpart_) add(g, f);
  for (const auto& [g, c] : other.lpart_) add(g, c);
  return *this;
}

WreathElement& WreathElement::operator-=(const WreathElement& other) {
  check_same_rank(d_, other.d_);
  for (const auto& [g, f] : other.cpart_) add(g, -f);
  for (const auto& [g, c] : other.lpart_) add(g, -c);
  return *this;
}

WreathElement& WreathElement::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    cpart_.clear();
    lpart_.clear();
    return *this;
  }
  for (auto& [g, f] : cpart_) f *= c;
  for (auto& [g, coef] : lpart_) coef *= c;
  return *this;
}

WreathElement bracket(const WreathElement& u, const WreathElement& v) {
  check_same_rank(u.rank(), v.rank());
  // [c1 + g1, c2 + g2] = [c1, g2] - [c2, g1]
  WreathElement r = module_times(u, linear_symbol(v));
  r -= module_times(v, linear_symbol(u));
  return r;
}

WreathElement module_action(const WreathElement& c, const Poly& f) {
  check_same_rank(c.rank(), f.rank());
  if (!c.in_module()) throw DomainError("module action is defined only on C (element has a Gamma component)");
  return module_times(c, f);
}

Poly lie_criterion(const WreathElement& c) {
  if (!c.in_module()) throw DomainError("Lie-element criterion is defined only on C (element has a Gamma component)");
  Poly r(c.rank());
  for (const auto& [g, f] : c.cpart()) {
    Variable v = g.kind == ModuleKind::A ? xvar(g.index) : yvar(g.index);
    r += Poly::variable(c.rank(), v) * f;
  }
  return r;
}

bool is_lie_element(const WreathElement& c) { return lie_criterion(c).is_zero(); }

WreathElement embed_generator(int d, Variable z) {
  check_rank(d);
  check_index(d, z.index);
  WreathElement w(d);
  if (z.kind == VarKind::X) {
    w.add(agen(z.index), Poly::constant(d, 1));
    w.add(pgen(z.index), 1);
  } else {
    w.add(bgen(z.index), Poly::constant(d, 1));
    w.add(qgen(z.index), 1);
  }
  return w;
}

LieExpr::LieExpr(int d) : d_(d) { check_rank(d); }

LieExpr LieExpr::word(int d, std::vector<Variable> word, const Rational& coefficient) {
  LieExpr e(d);
  e.add_term({coefficient, std::move(word), Poly::constant(d, 1)});
  return e;
}

void LieExpr::add_term(LieTerm term) {
  if (term.word.empty()) throw DomainError("bracket word must have length at least 1");
  check_same_rank(d_, term.multiplier.rank());
  for (const auto& z : term.word) check_index(d_, z.index);
  if (term.word.size() == 1 && !is_one(term.multiplier))
    throw DomainError("polynomial multiplier on a single generator: the ad-action is defined only on commutators");
  if (sgn(term.coefficient) == 0 || term.multiplier.is_zero()) return;
  if (term.word.size() >= 2 && term.word[0] == term.word[1]) return;  // [z,z] = 0
  for (auto& t : terms_) {
    if (t.word == term.word && t.multiplier == term.multiplier) {
      t.coefficient += term.coefficient;
      if (sgn(t.coefficient) == 0) std::erase_if(terms_, [](const LieTerm& x) { return sgn(x.coefficient) == 0; });
      return;
    }
  }
  terms_.push_back(std::move(term));
}

LieExpr& LieExpr::operator+=(const LieExpr& other) {
  check_same_rank(d_, other.d_);
  for (const auto& t : other.terms_) add_term(t);
  return *this;
}

LieExpr& LieExpr::operator-=(const LieExpr& other) {
  check_same_rank(d_, other.d_);
  for (auto t : other.terms_) {
    t.coefficient = -t.coefficient;
    add_term(std::move(t));
  }
  return *this;
}

LieExpr& LieExpr::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

LieExpr& LieExpr::operator*=(const Poly& f) {
  check_same_rank(d_, f.rank());
  LieExpr r(d_);
  for (const auto& t : terms_) {
    if (t.word.size() < 2)
      throw DomainError("polynomial multiplier on a single generator: the ad-action is defined only on commutators");
    r.add_term({t.coefficient, t.word, t.multiplier * f});
  }
  return *this = std::move(r);
}

LieExpr lie_bracket(const LieExpr& lhs, const LieExpr& rhs) {
  check_same_rank(lhs.rank(), rhs.rank());
  const int d = lhs.rank();
  LieExpr r(d);
  for (const auto& s : lhs.terms()) {
    for (const auto& t : rhs.terms()) {
      const Rational c = s.coefficient * t.coefficient;
      if (s.word.size() == 1 && t.word.size() == 1) {
        r.add_term({c, {s.word[0], t.word[0]}, Poly::constant(d, 1)});
      } else if (t.word.size() == 1) {
        auto w = s.word;
        w.push_back(t.word[0]);
        r.add_term({c, std::move(w), s.multiplier});
      } else if (s.word.size() == 1) {
        auto w = t.word;
        w.push_back(s.word[0]);
        r.add_term({-c, std::move(w), t.multiplier});
      }
      // Both in the commutator ideal: metabelian, contributes nothing.
    }
  }
  return r;
}

WreathElement embed(const LieExpr& e) {
  const int d = e.rank();
  WreathElement total(d);
  for (const auto& t : e.terms()) {
    WreathElement w = embed_generator(d, t.word.front());
    for (std::size_t k = 1; k < t.word.size(); ++k) w = bracket(w, embed_generator(d, t.word[k]));
    if (t.word.size() >= 2) w = module_action(w, t.multiplier);
    total += w * t.coefficient;
  }
  return total;
}

std::string to_string(const Variable& v) { return (v.kind == VarKind::X ? "x" : "y") + std::to_string(v.index); }

std::string to_string(const ModuleGenerator& g) {
  return (g.kind == ModuleKind::A ? "a" : "b") + std::to_string(g.index);
}

std::string to_string(const LinearGenerator& g) {
  return (g.kind == LinearKind::P ? "p" : "q") + std::to_string(g.index);
}

namespace {

void append_signed(std::string& s, bool& first, const Rational& c, const std::string& body) {
  const bool negative = sgn(c) < 0;
  const Rational mag = negative ? Rational(-c) : c;
  if (first) {
    if (negative) s += '-';
  } else {
    s += negative ? " - " : " + ";
  }
  first = false;
  if (mag != 1) s += to_string(mag) + '*';
  s += body;
}

}  // namespace

std::string to_string(const WreathElement& w) {
  if (w.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [g, f] : w.cpart()) {
    for (const auto& [m, c] : f.terms()) {
      std::string body = to_string(g);
      if (!m.is_one()) body += '*' + to_string(m);
      append_signed(s, first, c, body);
    }
  }
  for (const auto& [g, c] : w.lpart()) append_signed(s, first, c, to_string(g));
  return s;
}

std::string to_string(const LieExpr& e) {
  if (e.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : e.terms()) {
    std::string body;
    if (t.word.size() == 1) {
      body = to_string(t.word[0]);
    } else {
      body = "[";
      for (std::size_t k = 0; k < t.word.size(); ++k) body += (k ? "," : "") + to_string(t.word[k]);
      body += ']';
    }
    if (!is_one(t.multiplier)) {
      if (t.multiplier.size() == 1 && t.multiplier.terms().begin()->second == 1)
        body += '*' + to_string(t.multiplier);
      else
        body += "*(" + to_string(t.multiplier) + ')';
    }
    append_signed(s, first, t.coefficient, body);
  }
  return s;
}

}  // namespace metab
