#include "metabelian/poly.hpp"

#include <algorithm>
#include <functional>

namespace metab {

Monomial::Monomial(int d) : exps_(static_cast<std::size_t>(2 * d), 0) { check_rank(d); }

Monomial Monomial::of(int d, Variable v, unsigned power) {
  Monomial m(d);
  check_index(d, v.index);
  m.exps_[slot(d, v)] = static_cast<std::uint16_t>(power);
  m.degree_ = static_cast<int>(power);
  return m;
}

unsigned Monomial::exponent(Variable v) const {
  check_index(rank(), v.index);
  return exps_[slot(rank(), v)];
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_rank(rank(), other.rank());
  Monomial r = *this;
  for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] = static_cast<std::uint16_t>(r.exps_[k] + other.exps_[k]);
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::with_exponent(Variable v, unsigned e) const {
  Monomial r = *this;
  auto& slot_ref = r.exps_[slot(rank(), v)];
  r.degree_ += static_cast<int>(e) - static_cast<int>(slot_ref);
  slot_ref = static_cast<std::uint16_t>(e);
  return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  // Larger exponent on an earlier variable means a smaller monomial.
  return std::lexicographical_compare(b.exps_.begin(), b.exps_.end(), a.exps_.begin(), a.exps_.end());
}

Poly::Poly(int d) : d_(d) { check_rank(d); }

Poly Poly::constant(int d, const Rational& c) {
  Poly p(d);
  p.add_term(Monomial(d), c);
  return p;
}

Poly Poly::variable(int d, Variable v) { return monomial(Monomial::of(d, v)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p(m.rank());
  p.add_term(m, c);
  return p;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.degree());
  return deg;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Poly Poly::homogeneous_part(int n) const {
  Poly r(d_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == n) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  check_same_rank(d_, m.rank());
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  check_same_rank(d_, other.d_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_same_rank(d_, other.d_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_rank(a.d_, b.d_);
  Poly r(a.d_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Poly Poly::derivative(Variable v) const {
  check_index(d_, v.index);
  Poly r(d_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    r.add_term(m.with_exponent(v, e - 1), c * e);
  }
  return r;
}

Poly pow(const Poly& p, unsigned k) {
  Poly result = Poly::constant(p.rank(), 1);
  Poly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Poly substitute(const Poly& p, const std::map<Variable, Poly>& images) {
  const int d = p.rank();
  for (const auto& [v, img] : images) check_same_rank(d, img.rank());
  Poly result(d);
  // Powers are cached per variable since the same exponents recur across terms.
  std::map<std::pair<Variable, unsigned>, Poly> power_cache;
  auto power_of = [&](Variable v, unsigned e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = power_cache.find(key);
    if (it != power_cache.end()) return it->second;
    auto img = images.find(v);
    if (img == images.end())
      throw DomainError(std::string("substitution has no image for ") + (v.kind == VarKind::X ? "x" : "y") +
                        std::to_string(v.index));
    return power_cache.emplace(key, pow(img->second, e)).first->second;
  };
  for (const auto& [m, c] : p.terms()) {
    Poly term = Poly::constant(d, c);
    const auto exps = m.exponents();
    for (std::size_t s = 0; s < exps.size(); ++s)
      if (exps[s] != 0) term *= power_of(Monomial::variable_at(d, s), exps[s]);
    result += term;
  }
  return result;
}

std::map<Variable, Poly> identity_substitution(int d) {
  std::map<Variable, Poly> m;
  for (int i = 1; i <= d; ++i) {
    m.emplace(xvar(i), Poly::x(d, i));
    m.emplace(yvar(i), Poly::y(d, i));
  }
  return m;
}

std::vector<Monomial> monomials_of_degree(int d, int n) {
  check_rank(d);
  std::vector<Monomial> out;
  if (n < 0) return out;
  const std::size_t nvars = static_cast<std::size_t>(2 * d);
  std::vector<unsigned> exps(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t slot, unsigned left) {
    if (slot + 1 == nvars) {
      exps[slot] = left;
      Monomial m(d);
      for (std::size_t s = 0; s < nvars; ++s)
        if (exps[s] != 0) m = m * Monomial::of(d, Monomial::variable_at(d, s), exps[s]);
      out.push_back(std::move(m));
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      exps[slot] = e;
      rec(slot + 1, left - e);
    }
  };
  rec(0, static_cast<unsigned>(n));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  const int d = m.rank();
  const auto exps = m.exponents();
  for (std::size_t k = 0; k < exps.size(); ++k) {
    if (exps[k] == 0) continue;
    const Variable v = Monomial::variable_at(d, k);
    if (!s.empty()) s += '*';
    s += (v.kind == VarKind::X ? 'x' : 'y');
    s += std::to_string(v.index);
    if (exps[k] > 1) s += '^' + std::to_string(exps[k]);
  }
  return s;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + '*';
      s += to_string(m);
    }
  }
  return s;
}

}  // namespace metab
