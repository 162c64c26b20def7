#include "metabelian/canonical.hpp"

namespace metab {

namespace {

ModuleWord a_word(int i, ConstantWord tail = {}) { return {AHead{i}, std::move(tail)}; }
ModuleWord w_word(int p, int q, ConstantWord tail = {}) { return {WGen{p, q}, std::move(tail)}; }
ConstantWord xw(int i) { return ConstantWord({i}, {}); }
ConstantWord uw(int p, int q) { return ConstantWord({}, {UGen(p, q)}); }

LieExpr br(int d, std::initializer_list<Variable> word, const Rational& c = 1) {
  return LieExpr::word(d, std::vector<Variable>(word), c);
}

}  // namespace

std::vector<LGenerator> L_generators(int d) {
  check_rank(d);
  std::vector<LGenerator> out;
  auto push = [&](std::string family, std::vector<int> idx, FormalModuleElement formal, LieExpr pre) {
    WreathElement el = expand(formal);
    if (el.is_zero()) return;
    out.push_back({std::move(family), std::move(idx), std::move(formal), std::move(el), std::move(pre)});
  };
  const auto X = xvar;
  const auto Y = yvar;

  for (int i = 1; i <= d; ++i)
    push("g1", {i}, FormalModuleElement::of(d, w_word(i, i)), br(d, {X(i), Y(i)}));

  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      FormalModuleElement f = FormalModuleElement::of(d, w_word(i, j));
      f.add(w_word(j, i), 1);
      push("g2", {i, j}, std::move(f), br(d, {X(i), Y(j)}) + br(d, {X(j), Y(i)}));
    }

  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      FormalModuleElement f = FormalModuleElement::of(d, a_word(i, xw(j)));
      f.add(a_word(j, xw(i)), -1);
      push("g3", {i, j}, std::move(f), br(d, {X(i), X(j)}));
    }

  for (int i = 1; i <= d; ++i)
    for (int p = 1; p <= d; ++p)
      for (int q = p + 1; q <= d; ++q) {
        FormalModuleElement f = FormalModuleElement::of(d, a_word(i, uw(p, q)));
        f.add(w_word(p, q, xw(i)), -1);
        push("g4", {i, p, q}, std::move(f), br(d, {X(i), X(p), Y(q)}) - br(d, {X(i), Y(p), X(q)}));
      }

  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = j + 1; k <= d; ++k) {
        FormalModuleElement f = FormalModuleElement::of(d, a_word(i, uw(j, k)));
        f.add(a_word(j, uw(i, k)), -1);
        f.add(a_word(k, uw(i, j)), 1);
        push("g6", {i, j, k}, std::move(f),
             br(d, {X(i), X(j), Y(k)}) - br(d, {X(i), X(k), Y(j)}) + br(d, {X(j), X(k), Y(i)}));
      }

  // w_ij u_pq - w_pq u_ij is antisymmetric in (i,j) <-> (p,q).
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int p = 1; p <= d; ++p)
        for (int q = p + 1; q <= d; ++q) {
          if (std::make_pair(i, j) >= std::make_pair(p, q)) continue;
          FormalModuleElement f = FormalModuleElement::of(d, w_word(i, j, uw(p, q)));
          f.add(w_word(p, q, uw(i, j)), -1);
          LieExpr pre = br(d, {X(i), X(p), Y(j), Y(q)}) + br(d, {Y(i), Y(p), X(j), X(q)}) -
                        br(d, {X(i), Y(p), Y(j), X(q)}) - br(d, {Y(i), X(p), X(j), Y(q)});
          push("g5", {i, j, p, q}, std::move(f), std::move(pre));
        }
  return out;
}

std::vector<std::pair<LieExpr, WreathElement>> corollary_generators(int d) {
  std::vector<std::pair<LieExpr, WreathElement>> out;
  for (auto& g : L_generators(d)) out.emplace_back(std::move(g.preimage), std::move(g.element));
  return out;
}

}  // namespace metab
