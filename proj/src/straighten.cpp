// Straightening by chord diagrams.
//
// Every generator is a chord between two positions on a line:
//   0 = the module point M, 1..d, d+1 = the point at infinity,
// with x_i = (i, inf), u_pq = (p, q), a_i = (M, inf), w_pq = (M, q) where
// the M-chord also carries the label i resp. p.  Reading the chord (P, Q),
// P < Q, as det(v_P, v_Q) for v_i = (x_i, y_i), v_M = (a, b), v_inf = (0, 1)
// turns all four families of defining relations into the single identity
//   [P1 P3][P2 P4] = [P1 P2][P3 P4] + [P1 P4][P2 P3],   P1 < P2 < P3 < P4.
// Chords sharing an endpoint never cross, and each resolution strictly
// lowers the total number of crossing pairs, so the rewriting terminates in
// the non-crossing words.

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <set>

#include "metabelian/canonical.hpp"
#include "metabelian/graded.hpp"
#include "metabelian/weitzenbock.hpp"

namespace metab {

namespace {

struct Chord {
  int lo;
  int hi;
};

bool cross(const Chord& a, const Chord& b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) || (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

struct Diagram {
  std::optional<int> label;
  std::vector<Chord> chords;
};

Diagram to_diagram(int d, const ConstantWord& w) {
  Diagram g;
  for (int i : w.xs) g.chords.push_back({i, d + 1});
  for (const auto& u : w.us) g.chords.push_back({u.p, u.q});
  return g;
}

Diagram to_diagram(int d, const ModuleWord& w) {
  Diagram g = to_diagram(d, w.tail);
  if (const auto* a = std::get_if<AHead>(&w.head)) {
    g.label = a->i;
    g.chords.push_back({0, d + 1});
  } else {
    const auto& h = std::get<WGen>(w.head);
    g.label = h.p;
    g.chords.push_back({0, h.q});
  }
  return g;
}

ConstantWord tail_from(int d, const std::vector<Chord>& chords) {
  std::vector<int> xs;
  std::vector<UGen> us;
  for (const auto& c : chords) {
    if (c.lo == 0) continue;
    if (c.hi == d + 1)
      xs.push_back(c.lo);
    else
      us.emplace_back(c.lo, c.hi);
  }
  return ConstantWord(std::move(xs), std::move(us));
}

template <class Word>
Word from_diagram(int d, const Diagram& g);

template <>
ConstantWord from_diagram<ConstantWord>(int d, const Diagram& g) {
  return tail_from(d, g.chords);
}

template <>
ModuleWord from_diagram<ModuleWord>(int d, const Diagram& g) {
  auto head = std::find_if(g.chords.begin(), g.chords.end(), [](const Chord& c) { return c.lo == 0; });
  ModuleHead h = head->hi == d + 1 ? ModuleHead{AHead{*g.label}} : ModuleHead{WGen{*g.label, head->hi}};
  return ModuleWord{h, tail_from(d, g.chords)};
}

/// Indices of the first crossing pair, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_crossing(const Diagram& g) {
  for (std::size_t a = 0; a < g.chords.size(); ++a)
    for (std::size_t b = a + 1; b < g.chords.size(); ++b)
      if (cross(g.chords[a], g.chords[b])) return std::make_pair(a, b);
  return std::nullopt;
}

template <class Word>
Combination<Word> straighten_chords(const Combination<Word>& e) {
  const int d = e.rank();
  Combination<Word> pending = e;
  Combination<Word> done(d);
  std::size_t steps = 0;
  while (!pending.is_zero()) {
    const auto [word, coef] = *pending.terms().begin();
    pending.add(word, -coef);
    check_indices(d, word);
    Diagram g = to_diagram(d, word);
    const auto crossing = find_crossing(g);
    if (!crossing) {
      done.add(word, coef);
      continue;
    }
    if (++steps > kStraightenStepLimit) throw std::runtime_error("straightening exceeded the step limit");
    const auto [ia, ib] = *crossing;
    int pts[4] = {g.chords[ia].lo, g.chords[ia].hi, g.chords[ib].lo, g.chords[ib].hi};
    std::sort(pts, pts + 4);
    g.chords.erase(g.chords.begin() + static_cast<std::ptrdiff_t>(ib));
    g.chords.erase(g.chords.begin() + static_cast<std::ptrdiff_t>(ia));
    Diagram left = g;
    left.chords.push_back({pts[0], pts[1]});
    left.chords.push_back({pts[2], pts[3]});
    Diagram right = std::move(g);
    right.chords.push_back({pts[0], pts[3]});
    right.chords.push_back({pts[1], pts[2]});
    pending.add(from_diagram<Word>(d, left), coef);
    pending.add(from_diagram<Word>(d, right), coef);
  }
  return done;
}

/// Degree-n slice of the module-canonical basis with a solver for
/// coordinates in it.
struct CanonicalSlice {
  ModuleBasis ambient;
  std::vector<ModuleWord> words;
  linalg::SpanSolver solver;

  CanonicalSlice(int d, int n) : ambient(d, n), words(module_canonical_words(d, n)), solver(ambient.size()) {
    for (const auto& w : words)
      if (!solver.add(ambient.coordinates(expand(d, w))))
        throw std::logic_error("module-canonical words are linearly dependent at word " + to_string(w));
  }
};

std::shared_ptr<const CanonicalSlice> canonical_slice(int d, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const CanonicalSlice>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({d, n});
    if (it != cache.end()) return it->second;
  }
  auto slice = std::make_shared<const CanonicalSlice>(d, n);
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(d, n), std::move(slice)).first->second;
}

}  // namespace

FormalScalar straighten_scalar(const FormalScalar& e) { return straighten_chords(e); }

FormalModuleElement straighten_module(const FormalModuleElement& e) { return straighten_chords(e); }

FormalModuleElement module_canonical_form(const WreathElement& c) {
  const int d = c.rank();
  if (!c.in_module()) throw DomainError("element has a Gamma component");
  if (!is_constant(c)) throw DomainError("element is not a constant of the derivation");
  std::set<int> degrees;
  for (const auto& [g, f] : c.cpart())
    for (const auto& [m, coef] : f.terms()) degrees.insert(1 + m.degree());
  FormalModuleElement out(d);
  for (int n : degrees) {
    const auto slice = canonical_slice(d, n);
    const auto coords = slice->solver.coordinates(slice->ambient.coordinates(c.homogeneous_part(n)));
    if (!coords) throw std::logic_error("constant outside the span of module-canonical words in degree " + std::to_string(n));
    for (std::size_t k = 0; k < coords->size(); ++k) out.add(slice->words[k], (*coords)[k]);
  }
  return out;
}

}  // namespace metab
