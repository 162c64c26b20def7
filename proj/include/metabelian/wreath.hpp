#pragma once

#include <map>
#include <string>
#include <vector>

#include "metabelian/poly.hpp"

namespace metab {

enum class ModuleKind : std::uint8_t { A, B };

/// Free generator a_i or b_i of the module C over K[X_d,Y_d].
struct ModuleGenerator {
  ModuleKind kind;
  int index;

  friend auto operator<=>(const ModuleGenerator&, const ModuleGenerator&) = default;
};

inline ModuleGenerator agen(int i) { return {ModuleKind::A, i}; }
inline ModuleGenerator bgen(int i) { return {ModuleKind::B, i}; }

enum class LinearKind : std::uint8_t { P, Q };

/// Basis vector p_i or q_i of the abelian algebra Gamma.
struct LinearGenerator {
  LinearKind kind;
  int index;

  friend auto operator<=>(const LinearGenerator&, const LinearGenerator&) = default;
};

inline LinearGenerator pgen(int i) { return {LinearKind::P, i}; }
inline LinearGenerator qgen(int i) { return {LinearKind::Q, i}; }

/// Element sum a_i f_i + sum b_i g_i + sum alpha_i p_i + sum beta_i q_i of
/// the wreath product W = C + Gamma.  Zero coefficients are pruned.
class WreathElement {
 public:
  using ModulePart = std::map<ModuleGenerator, Poly>;
  using LinearPart = std::map<LinearGenerator, Rational>;

  explicit WreathElement(int d);

  /// g * f for a module generator g.
  static WreathElement module(ModuleGenerator g, const Poly& f);
  static WreathElement module(int d, ModuleGenerator g) { return module(g, Poly::constant(d, 1)); }
  static WreathElement linear(int d, LinearGenerator g, const Rational& c = 1);

  int rank() const noexcept { return d_; }
  const ModulePart& cpart() const noexcept { return cpart_; }
  const LinearPart& lpart() const noexcept { return lpart_; }

  bool is_zero() const noexcept { return cpart_.empty() && lpart_.empty(); }
  /// True when the element lies in the module C (no Gamma component).
  bool in_module() const noexcept { return lpart_.empty(); }

  Poly coefficient(ModuleGenerator g) const;
  Rational coefficient(LinearGenerator g) const;

  void add(ModuleGenerator g, const Poly& f);
  void add(LinearGenerator g, const Rational& c);

  /// Grading with deg a_i = deg b_i = deg p_i = deg q_i = 1.
  int degree() const;
  bool is_homogeneous() const;
  WreathElement homogeneous_part(int n) const;

  WreathElement& operator+=(const WreathElement& other);
  WreathElement& operator-=(const WreathElement& other);
  WreathElement& operator*=(const Rational& c);

  friend WreathElement operator+(WreathElement a, const WreathElement& b) { return a += b; }
  friend WreathElement operator-(WreathElement a, const WreathElement& b) { return a -= b; }
  friend WreathElement operator*(WreathElement a, const Rational& c) { return a *= c; }
  friend WreathElement operator*(const Rational& c, WreathElement a) { return a *= c; }
  friend WreathElement operator-(WreathElement a) { return a *= Rational(-1); }

  friend bool operator==(const WreathElement& a, const WreathElement& b) {
    return a.d_ == b.d_ && a.cpart_ == b.cpart_ && a.lpart_ == b.lpart_;
  }

 private:
  int d_;
  ModulePart cpart_;
  LinearPart lpart_;
};

/// Lie bracket of W: [C,C] = [Gamma,Gamma] = 0, [a_i f, p_j] = a_i f x_j,
/// [a_i f, q_j] = a_i f y_j (same for b_i), extended bilinearly and
/// antisymmetrically.
WreathElement bracket(const WreathElement& u, const WreathElement& v);

/// Right action of K[X_d,Y_d] on C.  Throws DomainError if c has a Gamma part.
WreathElement module_action(const WreathElement& c, const Poly& f);

/// sum x_i f_i + sum y_i g_i for c = sum a_i f_i + sum b_i g_i.
Poly lie_criterion(const WreathElement& c);

/// Whether c is the image of a commutator-ideal element under the embedding.
bool is_lie_element(const WreathElement& c);

/// Image of a free generator: x_i -> a_i + p_i, y_i -> b_i + q_i.
WreathElement embed_generator(int d, Variable z);

/// One summand of a LieExpr: coefficient * [z_1, ..., z_k] * multiplier,
/// where the multiplier acts through ad.  Multipliers other than 1 are only
/// valid on words of length >= 2.
struct LieTerm {
  Rational coefficient;
  std::vector<Variable> word;
  Poly multiplier;
};

/// Formal rational combination of left-normed bracket words over x_i, y_i.
/// Kept as a thin syntax layer; all semantics go through embed().
class LieExpr {
 public:
  explicit LieExpr(int d);

  static LieExpr word(int d, std::vector<Variable> word, const Rational& coefficient = 1);

  int rank() const noexcept { return d_; }
  const std::vector<LieTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  void add_term(LieTerm term);

  LieExpr& operator+=(const LieExpr& other);
  LieExpr& operator-=(const LieExpr& other);
  LieExpr& operator*=(const Rational& c);
  /// Module action by f; every term must have word length >= 2.
  LieExpr& operator*=(const Poly& f);

  friend LieExpr operator+(LieExpr a, const LieExpr& b) { return a += b; }
  friend LieExpr operator-(LieExpr a, const LieExpr& b) { return a -= b; }
  friend LieExpr operator*(LieExpr a, const Rational& c) { return a *= c; }
  friend LieExpr operator*(const Rational& c, LieExpr a) { return a *= c; }
  friend LieExpr operator*(LieExpr a, const Poly& f) { return a *= f; }

 private:
  int d_;
  std::vector<LieTerm> terms_;
};

/// Formal bracket of two expressions using the left-normed, metabelian
/// rules: [w, z] appends z, [z, w] = -[w, z], [F', F'] = 0.
LieExpr lie_bracket(const LieExpr& lhs, const LieExpr& rhs);

WreathElement embed(const LieExpr& e);

std::string to_string(const ModuleGenerator& g);
std::string to_string(const LinearGenerator& g);
std::string to_string(const Variable& v);
std::string to_string(const WreathElement& w);
std::string to_string(const LieExpr& e);

}  // namespace metab
