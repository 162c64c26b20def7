#pragma once

#include <map>
#include <utility>
#include <vector>

#include "metabelian/linalg.hpp"
#include "metabelian/poly.hpp"
#include "metabelian/wreath.hpp"

namespace metab {

/// Monomial basis of the degree-n part of K[X_d,Y_d], in term order.
class PolyBasis {
 public:
  PolyBasis(int d, int n);

  int rank() const noexcept { return d_; }
  int degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Monomial>& elements() const noexcept { return elements_; }

  /// Coordinates of a homogeneous degree-n polynomial.
  linalg::RationalRow coordinates(const Poly& p) const;
  Poly element(const std::vector<Rational>& coords) const;
  Poly element(const linalg::RationalRow& coords) const;

 private:
  int d_;
  int n_;
  std::vector<Monomial> elements_;
  std::map<Monomial, std::size_t> index_;
};

/// Basis {g * m} of the degree-n part of C, g in a_1..a_d, b_1..b_d and m a
/// monomial of degree n - 1.
class ModuleBasis {
 public:
  using Element = std::pair<ModuleGenerator, Monomial>;

  ModuleBasis(int d, int n);

  int rank() const noexcept { return d_; }
  int degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }

  /// Coordinates of a degree-n element of C.
  linalg::RationalRow coordinates(const WreathElement& c) const;
  WreathElement element(const std::vector<Rational>& coords) const;
  WreathElement element(const linalg::RationalRow& coords) const;

 private:
  int d_;
  int n_;
  std::vector<Element> elements_;
  std::map<Element, std::size_t> index_;
};

/// Number of monomials of degree n in 2d variables.
std::size_t poly_dimension(int d, int n);
/// Dimension of the degree-n part of C.
std::size_t module_dimension(int d, int n);

}  // namespace metab
