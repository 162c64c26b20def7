#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "metabelian/errors.hpp"

namespace metab {

using Rational = mpq_class;
using Integer = mpz_class;

enum class VarKind : std::uint8_t { X, Y };

/// A polynomial variable x_i or y_i, 1 <= i <= d.  The same symbols serve as
/// free generators of the metabelian Lie algebra.
struct Variable {
  VarKind kind;
  int index;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable xvar(int i) { return {VarKind::X, i}; }
inline Variable yvar(int i) { return {VarKind::Y, i}; }

/// Exponent vector over x_1..x_d, y_1..y_d, stored densely.
///
/// operator< is the term order: total degree first, then lexicographic with
/// x_1 < ... < x_d < y_1 < ... < y_d, so that ascending iteration lists
/// x_1 before x_2 before y_1 in each degree.
class Monomial {
 public:
  explicit Monomial(int d);

  static Monomial of(int d, Variable v, unsigned power = 1);

  int rank() const noexcept { return static_cast<int>(exps_.size() / 2); }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  unsigned exponent(Variable v) const;
  std::span<const std::uint16_t> exponents() const noexcept { return exps_; }

  /// Slot of v in the dense exponent vector.
  static std::size_t slot(int d, Variable v) {
    return static_cast<std::size_t>(v.kind == VarKind::X ? v.index - 1 : d + v.index - 1);
  }
  static Variable variable_at(int d, std::size_t slot) {
    const int s = static_cast<int>(slot);
    return s < d ? xvar(s + 1) : yvar(s - d + 1);
  }

  Monomial operator*(const Monomial& other) const;
  Monomial with_exponent(Variable v, unsigned e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint16_t> exps_;
  int degree_ = 0;
};

/// Sparse polynomial over Q in x_1..x_d, y_1..y_d.  Zero coefficients are
/// never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Poly(int d);

  static Poly constant(int d, const Rational& c);
  static Poly variable(int d, Variable v);
  static Poly x(int d, int i) { return variable(d, xvar(i)); }
  static Poly y(int d, int i) { return variable(d, yvar(i)); }
  static Poly monomial(const Monomial& m, const Rational& c = 1);

  int rank() const noexcept { return d_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  /// Highest total degree, -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Poly homogeneous_part(int n) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b) { return a.d_ == b.d_ && a.terms_ == b.terms_; }

  /// Partial derivative with respect to v.
  Poly derivative(Variable v) const;

 private:
  int d_;
  Terms terms_;
};

Poly pow(const Poly& p, unsigned k);

/// Simultaneous substitution of every variable occurring in p.  Throws
/// DomainError if a variable of p has no image.
Poly substitute(const Poly& p, const std::map<Variable, Poly>& images);

/// The identity substitution map on all 2d variables.
std::map<Variable, Poly> identity_substitution(int d);

/// All monomials of total degree n in 2d variables, in ascending term order.
std::vector<Monomial> monomials_of_degree(int d, int n);

std::string to_string(const Monomial& m);
std::string to_string(const Poly& p);
std::string to_string(const Rational& q);

}  // namespace metab
