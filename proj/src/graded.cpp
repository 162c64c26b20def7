#include "metabelian/graded.hpp"

#include <algorithm>

namespace metab {

namespace {

void sort_row(linalg::RationalRow& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

PolyBasis::PolyBasis(int d, int n) : d_(d), n_(n), elements_(monomials_of_degree(d, n)) {
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);
}

linalg::RationalRow PolyBasis::coordinates(const Poly& p) const {
  check_same_rank(d_, p.rank());
  linalg::RationalRow row;
  row.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    auto it = index_.find(m);
    if (it == index_.end())
      throw DomainError("polynomial is not homogeneous of degree " + std::to_string(n_));
    row.emplace_back(it->second, c);
  }
  sort_row(row);
  return row;
}

Poly PolyBasis::element(const std::vector<Rational>& coords) const {
  Poly p(d_);
  for (std::size_t k = 0; k < coords.size() && k < elements_.size(); ++k) p.add_term(elements_[k], coords[k]);
  return p;
}

Poly PolyBasis::element(const linalg::RationalRow& coords) const {
  Poly p(d_);
  for (const auto& [k, c] : coords) p.add_term(elements_.at(k), c);
  return p;
}

ModuleBasis::ModuleBasis(int d, int n) : d_(d), n_(n) {
  check_rank(d);
  if (n >= 1) {
    const auto monos = monomials_of_degree(d, n - 1);
    for (ModuleKind kind : {ModuleKind::A, ModuleKind::B})
      for (int i = 1; i <= d; ++i)
        for (const auto& m : monos) elements_.emplace_back(ModuleGenerator{kind, i}, m);
  }
  for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);
}

linalg::RationalRow ModuleBasis::coordinates(const WreathElement& c) const {
  check_same_rank(d_, c.rank());
  if (!c.in_module()) throw DomainError("element has a Gamma component");
  linalg::RationalRow row;
  for (const auto& [g, f] : c.cpart()) {
    for (const auto& [m, coef] : f.terms()) {
      auto it = index_.find({g, m});
      if (it == index_.end()) throw DomainError("element is not homogeneous of degree " + std::to_string(n_));
      row.emplace_back(it->second, coef);
    }
  }
  sort_row(row);
  return row;
}

WreathElement ModuleBasis::element(const std::vector<Rational>& coords) const {
  WreathElement w(d_);
  for (std::size_t k = 0; k < coords.size() && k < elements_.size(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    w.add(elements_[k].first, Poly::monomial(elements_[k].second, coords[k]));
  }
  return w;
}

WreathElement ModuleBasis::element(const linalg::RationalRow& coords) const {
  WreathElement w(d_);
  for (const auto& [k, c] : coords) w.add(elements_.at(k).first, Poly::monomial(elements_.at(k).second, c));
  return w;
}

std::size_t poly_dimension(int d, int n) {
  if (n < 0) return 0;
  // C(n + 2d - 1, n)
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n + 2 * d - 1), static_cast<unsigned long>(n));
  return r.get_ui();
}

std::size_t module_dimension(int d, int n) {
  if (n < 1) return 0;
  return static_cast<std::size_t>(2 * d) * poly_dimension(d, n - 1);
}

}  // namespace metab
