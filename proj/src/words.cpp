#include <algorithm>
#include <functional>

#include "metabelian/canonical.hpp"

namespace metab {

UGen::UGen(int p_, int q_) : p(p_), q(q_) {
  if (p >= q) throw DomainError("u(" + std::to_string(p) + "," + std::to_string(q) + ") needs p < q");
}

bool intersect(const UGen& u, const UGen& v) {
  return (u.p < v.p && v.p < u.q && u.q < v.q) || (v.p < u.p && u.p < v.q && v.q < u.q);
}

bool covers(const UGen& u, int i) { return u.p < i && i < u.q; }

ConstantWord::ConstantWord(std::vector<int> xs_, std::vector<UGen> us_) : xs(std::move(xs_)), us(std::move(us_)) {
  std::sort(xs.begin(), xs.end());
  std::sort(us.begin(), us.end());
}

ConstantWord ConstantWord::operator*(const ConstantWord& other) const {
  std::vector<int> x = xs;
  x.insert(x.end(), other.xs.begin(), other.xs.end());
  std::vector<UGen> u = us;
  u.insert(u.end(), other.us.begin(), other.us.end());
  return ConstantWord(std::move(x), std::move(u));
}

FormalScalar operator*(const FormalScalar& e, const ConstantWord& m) {
  FormalScalar r(e.rank());
  for (const auto& [w, c] : e.terms()) r.add(w * m, c);
  return r;
}

FormalModuleElement operator*(const FormalModuleElement& e, const ConstantWord& m) {
  FormalModuleElement r(e.rank());
  for (const auto& [w, c] : e.terms()) r.add(ModuleWord{w.head, w.tail * m}, c);
  return r;
}

FormalScalar operator*(const FormalScalar& a, const FormalScalar& b) {
  check_same_rank(a.rank(), b.rank());
  FormalScalar r(a.rank());
  for (const auto& [w, c] : b.terms()) r += (a * w) * c;
  return r;
}

FormalModuleElement operator*(const FormalModuleElement& a, const FormalScalar& b) {
  check_same_rank(a.rank(), b.rank());
  FormalModuleElement r(a.rank());
  for (const auto& [w, c] : b.terms()) r += (a * w) * c;
  return r;
}

bool is_canonical(const ConstantWord& w) {
  for (std::size_t a = 0; a < w.us.size(); ++a) {
    for (int i : w.xs)
      if (covers(w.us[a], i)) return false;
    for (std::size_t b = a + 1; b < w.us.size(); ++b)
      if (intersect(w.us[a], w.us[b])) return false;
  }
  return true;
}

bool is_module_canonical(const ModuleWord& w) {
  if (!is_canonical(w.tail)) return false;
  if (const auto* h = std::get_if<WGen>(&w.head)) {
    for (const auto& u : w.tail.us)
      if (covers(u, h->q)) return false;
    for (int i : w.tail.xs)
      if (i < h->q) return false;
  }
  return true;
}

bool is_residue_word(const ModuleWord& w) {
  if (const auto* a = std::get_if<AHead>(&w.head)) {
    if (!w.tail.xs.empty() && w.tail.xs.front() < a->i) return false;
    return is_canonical(w.tail * ConstantWord({a->i}, {}));
  }
  const auto& h = std::get<WGen>(w.head);
  if (h.p >= h.q || !w.tail.xs.empty()) return false;
  const UGen head(h.p, h.q);
  if (!w.tail.us.empty() && w.tail.us.front() < head) return false;
  return is_canonical(w.tail * ConstantWord({}, {head}));
}

void check_indices(int d, const ConstantWord& w) {
  for (int i : w.xs) check_index(d, i);
  for (const auto& u : w.us) {
    check_index(d, u.p);
    check_index(d, u.q);
  }
}

void check_indices(int d, const ModuleWord& w) {
  if (const auto* a = std::get_if<AHead>(&w.head)) {
    check_index(d, a->i);
  } else {
    const auto& h = std::get<WGen>(w.head);
    check_index(d, h.p);
    check_index(d, h.q);
  }
  check_indices(d, w.tail);
}

Poly expand_u(int d, const UGen& u) {
  check_index(d, u.p);
  check_index(d, u.q);
  return Poly::x(d, u.p) * Poly::y(d, u.q) - Poly::x(d, u.q) * Poly::y(d, u.p);
}

WreathElement expand_w(int d, const WGen& w) {
  check_index(d, w.p);
  check_index(d, w.q);
  return WreathElement::module(agen(w.p), Poly::y(d, w.q)) - WreathElement::module(bgen(w.p), Poly::x(d, w.q));
}

Poly expand(int d, const ConstantWord& w) {
  check_indices(d, w);
  Poly r = Poly::constant(d, 1);
  for (int i : w.xs) r *= Poly::x(d, i);
  for (const auto& u : w.us) r *= expand_u(d, u);
  return r;
}

Poly expand(const FormalScalar& e) {
  Poly r(e.rank());
  for (const auto& [w, c] : e.terms()) r += expand(e.rank(), w) * c;
  return r;
}

WreathElement expand(int d, const ModuleWord& w) {
  check_indices(d, w);
  WreathElement head = std::holds_alternative<AHead>(w.head) ? WreathElement::module(d, agen(std::get<AHead>(w.head).i))
                                                             : expand_w(d, std::get<WGen>(w.head));
  return module_action(head, expand(d, w.tail));
}

WreathElement expand(const FormalModuleElement& e) {
  WreathElement r(e.rank());
  for (const auto& [w, c] : e.terms()) r += expand(e.rank(), w) * c;
  return r;
}

std::vector<ConstantWord> canonical_constant_words(int d, int n) {
  check_rank(d);
  std::vector<ConstantWord> out;
  if (n < 0) return out;
  std::vector<UGen> intervals;
  for (int p = 1; p <= d; ++p)
    for (int q = p + 1; q <= d; ++q) intervals.emplace_back(p, q);

  std::vector<UGen> chosen;
  std::vector<int> xs;
  std::function<void(int, int)> choose_x = [&](int from, int left) {
    if (left == 0) {
      out.emplace_back(xs, chosen);
      return;
    }
    for (int i = from; i <= d; ++i) {
      if (std::any_of(chosen.begin(), chosen.end(), [i](const UGen& u) { return covers(u, i); })) continue;
      xs.push_back(i);
      choose_x(i, left - 1);
      xs.pop_back();
    }
  };
  std::function<void(std::size_t, int)> choose_u = [&](std::size_t from, int left) {
    choose_x(1, left);
    if (left < 2) return;
    for (std::size_t k = from; k < intervals.size(); ++k) {
      const UGen& u = intervals[k];
      if (std::any_of(chosen.begin(), chosen.end(), [&u](const UGen& v) { return intersect(u, v); })) continue;
      chosen.push_back(u);
      choose_u(k, left - 2);
      chosen.pop_back();
    }
  };
  choose_u(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModuleWord> module_canonical_words(int d, int n) {
  std::vector<ModuleWord> out;
  if (n < 1) return out;
  const auto tails_a = canonical_constant_words(d, n - 1);
  for (int i = 1; i <= d; ++i)
    for (const auto& t : tails_a) out.push_back({AHead{i}, t});
  if (n >= 2) {
    const auto tails_w = canonical_constant_words(d, n - 2);
    for (int p = 1; p <= d; ++p)
      for (int q = 1; q <= d; ++q)
        for (const auto& t : tails_w) {
          ModuleWord w{WGen{p, q}, t};
          if (is_module_canonical(w)) out.push_back(std::move(w));
        }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ModuleWord> residue_words(int d, int n) {
  std::vector<ModuleWord> out;
  for (const auto& w : canonical_constant_words(d, n)) {
    if (!w.xs.empty()) {
      std::vector<int> rest(w.xs.begin() + 1, w.xs.end());
      out.push_back({AHead{w.xs.front()}, ConstantWord(std::move(rest), w.us)});
    } else if (!w.us.empty()) {
      std::vector<UGen> rest(w.us.begin() + 1, w.us.end());
      out.push_back({WGen{w.us.front().p, w.us.front().q}, ConstantWord({}, std::move(rest))});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace metab
