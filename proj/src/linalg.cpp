#include "metabelian/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace metab::linalg {

namespace {

/// a*x + b*y for sparse rows.
template <class T>
SparseRow<T> combine(const T& a, const SparseRow<T>& x, const T& b, const SparseRow<T>& y) {
  SparseRow<T> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, b * j->second);
      ++j;
    } else {
      T v = a * i->second + b * j->second;
      if (sgn(v) != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void make_primitive(IntegerRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

template <class T>
const T* entry(const SparseRow<T>& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace

IntegerRow primitive_part(const RationalRow& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntegerRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    Integer num = v.get_num() * (l / v.get_den());
    out.emplace_back(c, std::move(num));
  }
  make_primitive(out);
  return out;
}

bool FractionFreeEchelon::insert(IntegerRow row) {
  make_primitive(row);
  while (!row.empty()) {
    const std::size_t lead = row.front().first;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    const IntegerRow& pivot = it->second;
    // Cancel the leading entry: pivot_lead * row - row_lead * pivot.
    Integer g = gcd(pivot.front().second, row.front().second);
    Integer a = pivot.front().second / g;
    Integer b = -(row.front().second / g);
    row = combine(a, row, b, pivot);
    make_primitive(row);
  }
  return false;
}

std::vector<RationalRow> FractionFreeEchelon::nullspace() const {
  // Back-substitute to reduced echelon form, largest pivot column first.  A
  // reduced row has entries only at its lead and at free columns, so
  // eliminating column c never touches columns before c and one left-to-right
  // pass suffices.
  std::map<std::size_t, IntegerRow> reduced;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    IntegerRow row = it->second;
    std::size_t k = 1;
    while (k < row.size()) {
      auto piv = reduced.find(row[k].first);
      if (piv == reduced.end()) {
        ++k;
        continue;
      }
      const Integer& pv = piv->second.front().second;
      Integer g = gcd(pv, row[k].second);
      row = combine(Integer(pv / g), row, Integer(-(row[k].second / g)), piv->second);
      make_primitive(row);
    }
    reduced.emplace(it->first, std::move(row));
  }

  // Kernel vector of free column f: 1 at f, -row_f / lead at each pivot row.
  std::map<std::size_t, RationalRow> by_free;
  for (std::size_t c = 0; c < columns_; ++c)
    if (!reduced.count(c)) by_free[c].emplace_back(c, 1);
  for (const auto& [lead, row] : reduced)
    for (std::size_t k = 1; k < row.size(); ++k) {
      Rational q(-row[k].second, row.front().second);
      q.canonicalize();
      by_free[row[k].first].emplace_back(lead, std::move(q));
    }
  std::vector<RationalRow> basis;
  basis.reserve(by_free.size());
  for (auto& [c, v] : by_free) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t bareiss_rank(std::vector<std::vector<Integer>> m, const std::vector<std::size_t>& column_order) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::vector<std::size_t> order = column_order;
  if (order.empty()) {
    order.resize(cols);
    std::iota(order.begin(), order.end(), 0);
  }
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t oc = 0; oc < order.size() && rank < rows; ++oc) {
    const std::size_t col = order[oc];
    std::size_t piv = rank;
    while (piv < rows && sgn(m[piv][col]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (c == col) continue;
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

bool SpanSolver::add(const RationalRow& v) {
  RationalRow row = v;
  RationalRow combo{{size_, Rational(1)}};
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) break;
    const Rational c = -row.front().second;
    row = combine(Rational(1), row, c, it->second.row);
    combo = combine(Rational(1), combo, c, it->second.combination);
  }
  if (row.empty()) return false;
  const Rational inv = 1 / row.front().second;
  for (auto& [col, val] : row) val *= inv;
  for (auto& [col, val] : combo) val *= inv;
  const std::size_t lead = row.front().first;
  pivots_.emplace(lead, PivotRow{std::move(row), std::move(combo)});
  ++size_;
  return true;
}

std::optional<std::vector<Rational>> SpanSolver::coordinates(const RationalRow& v) const {
  RationalRow row = v;
  RationalRow coeffs;
  while (!row.empty()) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) return std::nullopt;
    const Rational c = row.front().second;
    row = combine(Rational(1), row, Rational(-c), it->second.row);
    coeffs = combine(Rational(1), coeffs, c, it->second.combination);
  }
  std::vector<Rational> dense(size_, 0);
  for (const auto& [k, c] : coeffs) dense[k] = c;
  return dense;
}

}  // namespace metab::linalg
