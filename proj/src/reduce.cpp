// Reduction modulo L along the proof that the residue words span C^delta / L.

#include <optional>

#include "metabelian/canonical.hpp"
#include "metabelian/weitzenbock.hpp"

namespace metab {

namespace {

std::vector<UGen> without(const std::vector<UGen>& us, std::size_t k) {
  std::vector<UGen> r = us;
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

std::vector<int> without(const std::vector<int>& xs, std::size_t k) {
  std::vector<int> r = xs;
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

template <class T>
std::vector<T> with(std::vector<T> v, std::initializer_list<T> extra) {
  v.insert(v.end(), extra);
  return v;
}

/// One exact rewrite of a tail that is not canonical:
///   S1  x_m u_pq = x_p u_mq + x_q u_pm            (p < m < q)
///   R1  u_ik u_jl = u_ij u_kl + u_il u_jk          (i < j < k < l)
std::optional<std::pair<ConstantWord, ConstantWord>> tail_rewrite(const ConstantWord& t) {
  for (std::size_t a = 0; a < t.us.size(); ++a) {
    const UGen u = t.us[a];
    for (std::size_t k = 0; k < t.xs.size(); ++k) {
      const int m = t.xs[k];
      if (!covers(u, m)) continue;
      const auto xs = without(t.xs, k);
      const auto us = without(t.us, a);
      return std::make_pair(ConstantWord(with(xs, {u.p}), with(us, {UGen(m, u.q)})),
                            ConstantWord(with(xs, {u.q}), with(us, {UGen(u.p, m)})));
    }
    for (std::size_t b = a + 1; b < t.us.size(); ++b) {
      if (!intersect(u, t.us[b])) continue;
      const UGen lo = std::min(u, t.us[b]);
      const UGen hi = std::max(u, t.us[b]);
      // lo = (i,k), hi = (j,l) with i < j < k < l
      const auto us = without(without(t.us, b), a);
      return std::make_pair(ConstantWord(t.xs, with(us, {UGen(lo.p, hi.p), UGen(lo.q, hi.q)})),
                            ConstantWord(t.xs, with(us, {UGen(lo.p, hi.q), UGen(hi.p, lo.q)})));
    }
  }
  return std::nullopt;
}

}  // namespace

FormalModuleElement reduce_mod_L(const FormalModuleElement& e) {
  const int d = e.rank();
  FormalModuleElement pending = straighten_module(e);
  FormalModuleElement done(d);
  std::size_t steps = 0;
  while (!pending.is_zero()) {
    const auto [word, c] = *pending.terms().begin();
    pending.add(word, -c);
    if (++steps > kStraightenStepLimit) throw std::runtime_error("reduction modulo L exceeded the step limit");
    const ConstantWord& t = word.tail;

    if (const auto* h = std::get_if<WGen>(&word.head)) {
      // g1: w_ii = 0
      if (h->p == h->q) continue;
      // g2: w_pq = -w_qp
      if (h->p > h->q) {
        pending.add({WGen{h->q, h->p}, t}, -c);
        continue;
      }
      const UGen head(h->p, h->q);
      // g4: w_pq x_i = a_i u_pq
      if (!t.xs.empty()) {
        pending.add({AHead{t.xs.front()}, ConstantWord(without(t.xs, 0), with(t.us, {head}))}, c);
        continue;
      }
      // R1 on the tail
      if (auto r = tail_rewrite(t)) {
        pending.add({word.head, r->first}, c);
        pending.add({word.head, r->second}, c);
        continue;
      }
      // R2 between head and tail, after g5 if the tail interval starts first
      bool rewritten = false;
      for (std::size_t k = 0; k < t.us.size() && !rewritten; ++k) {
        if (!intersect(head, t.us[k])) continue;
        const UGen lo = std::min(head, t.us[k]);
        const UGen hi = std::max(head, t.us[k]);
        const auto us = without(t.us, k);
        // w_{lo.p lo.q} u_{hi} = w_{lo.p hi.p} u_{lo.q hi.q} + w_{lo.p hi.q} u_{hi.p lo.q}
        pending.add({WGen{lo.p, hi.p}, ConstantWord({}, with(us, {UGen(lo.q, hi.q)}))}, c);
        pending.add({WGen{lo.p, hi.q}, ConstantWord({}, with(us, {UGen(hi.p, lo.q)}))}, c);
        rewritten = true;
      }
      if (rewritten) continue;
      // g5: the smallest interval goes to the head
      if (!t.us.empty() && t.us.front() < head) {
        const UGen first = t.us.front();
        pending.add({WGen{first.p, first.q}, ConstantWord({}, with(without(t.us, 0), {head}))}, c);
        continue;
      }
      done.add(word, c);
      continue;
    }

    const int i0 = std::get<AHead>(word.head).i;
    // S1 / R1 on the tail
    if (auto r = tail_rewrite(t)) {
      pending.add({word.head, r->first}, c);
      pending.add({word.head, r->second}, c);
      continue;
    }
    // g6: a_j u_ik = a_i u_jk + a_k u_ij for a covered head index j
    bool rewritten = false;
    for (std::size_t k = 0; k < t.us.size() && !rewritten; ++k) {
      const UGen u = t.us[k];
      if (!covers(u, i0)) continue;
      const auto us = without(t.us, k);
      pending.add({AHead{u.p}, ConstantWord(t.xs, with(us, {UGen(i0, u.q)}))}, c);
      pending.add({AHead{u.q}, ConstantWord(t.xs, with(us, {UGen(u.p, i0)}))}, c);
      rewritten = true;
    }
    if (rewritten) continue;
    // g3: a_i x_j = a_j x_i, smallest index to the head
    if (!t.xs.empty() && t.xs.front() < i0) {
      pending.add({AHead{t.xs.front()}, ConstantWord(with(without(t.xs, 0), {i0}), t.us)}, c);
      continue;
    }
    done.add(word, c);
  }
  return done;
}

LMembership membership_in_L(const WreathElement& c) {
  FormalModuleElement canonical = module_canonical_form(c);
  FormalModuleElement residue = reduce_mod_L(canonical);
  return {std::move(canonical), std::move(residue), is_lie_element(c)};
}

bool is_in_L(const WreathElement& c) { return membership_in_L(c).in_L(); }

}  // namespace metab
