#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "metabelian/poly.hpp"
#include "metabelian/wreath.hpp"

namespace metab {

/// The determinant u_pq = x_p y_q - x_q y_p, p < q, read as the open
/// interval (p, q).
struct UGen {
  int p;
  int q;

  UGen(int p_, int q_);
  friend auto operator<=>(const UGen&, const UGen&) = default;
};

/// w_pq = a_p y_q - b_p x_q.  No order constraint on p, q.
struct WGen {
  int p;
  int q;
  friend auto operator<=>(const WGen&, const WGen&) = default;
};

/// The module generator a_i used as a word head.
struct AHead {
  int i;
  friend auto operator<=>(const AHead&, const AHead&) = default;
};

/// Open intervals (k,l), (k',l') intersect when they overlap without one
/// containing the other.
bool intersect(const UGen& u, const UGen& v);
/// u covers index i when k < i < l.
bool covers(const UGen& u, int i);

/// Commutative product x_{i_1} ... x_{i_m} u_{k_1 l_1} ... u_{k_s l_s}.
/// Factors are kept sorted, so two orderings of the same product compare
/// equal; is_canonical() tells whether it is a straightened basis word.
struct ConstantWord {
  std::vector<int> xs;
  std::vector<UGen> us;

  ConstantWord() = default;
  ConstantWord(std::vector<int> xs_, std::vector<UGen> us_);

  int degree() const noexcept { return static_cast<int>(xs.size() + 2 * us.size()); }
  ConstantWord operator*(const ConstantWord& other) const;

  friend auto operator<=>(const ConstantWord&, const ConstantWord&) = default;
};

using ModuleHead = std::variant<AHead, WGen>;

/// head * tail with head a_i or w_pq.
struct ModuleWord {
  ModuleHead head;
  ConstantWord tail;

  int degree() const noexcept { return (std::holds_alternative<AHead>(head) ? 1 : 2) + tail.degree(); }

  friend auto operator<=>(const ModuleWord&, const ModuleWord&) = default;
};

/// Rational combination of words over a fixed rank d.
template <class Word>
class Combination {
 public:
  using Terms = std::map<Word, Rational>;

  explicit Combination(int d) : d_(d) { check_rank(d); }
  static Combination of(int d, const Word& w, const Rational& c = 1) {
    Combination r(d);
    r.add(w, c);
    return r;
  }

  int rank() const noexcept { return d_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Word& w, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Combination& operator+=(const Combination& o) {
    check_same_rank(d_, o.d_);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    check_same_rank(d_, o.d_);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  Combination& operator*=(const Rational& c) {
    if (sgn(c) == 0) terms_.clear();
    for (auto& [w, coef] : terms_) coef *= c;
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(Combination a, const Rational& c) { return a *= c; }
  friend Combination operator*(const Rational& c, Combination a) { return a *= c; }
  friend bool operator==(const Combination& a, const Combination& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  int d_;
  Terms terms_;
};

/// Unstraightened products of x's and u's.
using FormalScalar = Combination<ConstantWord>;
/// Unstraightened head-times-product elements of C^delta.
using FormalModuleElement = Combination<ModuleWord>;

/// Multiplies every word by a constant word.
FormalScalar operator*(const FormalScalar& e, const ConstantWord& m);
FormalModuleElement operator*(const FormalModuleElement& e, const ConstantWord& m);
FormalScalar operator*(const FormalScalar& a, const FormalScalar& b);
FormalModuleElement operator*(const FormalModuleElement& a, const FormalScalar& b);

// --- word predicates ------------------------------------------------------

/// Basis word of K[X_d,U]: u-intervals pairwise disjoint or nested, no
/// x-index covered by a u.
bool is_canonical(const ConstantWord& w);

/// Straightened basis word of C^delta.  Tail canonical; for a w_pq head, q
/// is covered by no u and no x-index is smaller than q (the a-head carries
/// no condition).
bool is_module_canonical(const ModuleWord& w);

/// Word of the spanning set of C^delta / L: either a_{i0} * tail with
/// x_{i0} * tail canonical and i0 <= every x-index, or w_{p0 q0} * tail with
/// no x's, p0 < q0, u_{p0 q0} * tail canonical and (p0,q0) the smallest
/// interval in sorted order.
bool is_residue_word(const ModuleWord& w);

void check_indices(int d, const ConstantWord& w);
void check_indices(int d, const ModuleWord& w);

// --- expansion ------------------------------------------------------------

Poly expand_u(int d, const UGen& u);
WreathElement expand_w(int d, const WGen& w);
Poly expand(int d, const ConstantWord& w);
Poly expand(const FormalScalar& e);
WreathElement expand(int d, const ModuleWord& w);
WreathElement expand(const FormalModuleElement& e);

// --- enumeration ----------------------------------------------------------

/// Canonical words of K[X_d,U] of degree n in sorted order.
std::vector<ConstantWord> canonical_constant_words(int d, int n);
/// Straightened basis words of C^delta of degree n (deg a_i = 1, deg w = 2).
std::vector<ModuleWord> module_canonical_words(int d, int n);
/// Residue words of degree n.
std::vector<ModuleWord> residue_words(int d, int n);

// --- straightening ----------------------------------------------------------

/// Hard limit on rewrite steps per call.
inline constexpr std::size_t kStraightenStepLimit = 1'000'000;

/// Rewrites with x_j u_ik = x_i u_jk + x_k u_ij and
/// u_ik u_jl = u_ij u_kl + u_il u_jk until every word is canonical.
FormalScalar straighten_scalar(const FormalScalar& e);

/// Straightens into module-canonical words with the relations
/// a_i u_jk = w_ik x_j - w_ij x_k and w_ik u_jl = w_ij u_kl + w_il u_jk
/// together with the scalar relations on the tail.
FormalModuleElement straighten_module(const FormalModuleElement& e);

/// Coordinates of a homogeneous-by-parts C^delta element in the
/// module-canonical basis.  Throws DomainError if c is not a constant of C.
FormalModuleElement module_canonical_form(const WreathElement& c);

// --- the submodule L ----------------------------------------------------------

/// One generator of L together with its preimage in the commutator ideal.
struct LGenerator {
  std::string family;          ///< "g1" .. "g6"
  std::vector<int> indices;    ///< index tuple in the family's order
  FormalModuleElement formal;  ///< as written in a, w, x, u
  WreathElement element;       ///< expansion in C
  LieExpr preimage;            ///< bracket expression embedding to element
};

/// Generators of L over their index ranges:
///   g1  w_ii;  g2  w_ij + w_ji (i<j);  g3  a_i x_j - a_j x_i (i<j);
///   g4  a_i u_pq - w_pq x_i (p<q);  g6  a_i u_jk - a_j u_ik + a_k u_ij (i<j<k);
///   g5  w_ij u_pq - w_pq u_ij (i<j, p<q).
/// g5 is listed for (i,j) < (p,q) only; the (i,j) = (p,q) instances vanish.
std::vector<LGenerator> L_generators(int d);

/// The same generators keyed by their bracket preimages.
std::vector<std::pair<LieExpr, WreathElement>> corollary_generators(int d);

/// Reduces a combination (straightened first if needed) modulo L into
/// residue words, applying in order: g1/g2 head sign normalisation, g4,
/// R1/R2 de-intersection (with g5 to bring the leftmost interval to the
/// head), g5 sorting, S1 and g6 uncovering, g3 sorting.
FormalModuleElement reduce_mod_L(const FormalModuleElement& e);

struct LMembership {
  FormalModuleElement canonical;  ///< module-canonical form of the input
  FormalModuleElement residue;    ///< its reduction modulo L
  bool lie;                       ///< Lie-element criterion on the input
  bool in_L() const noexcept { return residue.is_zero(); }
};

/// Throws DomainError unless c lies in C and is a delta-constant.
LMembership membership_in_L(const WreathElement& c);
bool is_in_L(const WreathElement& c);

// --- text -----------------------------------------------------------------

std::string to_string(const UGen& u);
std::string to_string(const WGen& w);
std::string to_string(const ConstantWord& w);
std::string to_string(const ModuleWord& w);
std::string to_string(const FormalScalar& e);
std::string to_string(const FormalModuleElement& e);

}  // namespace metab
