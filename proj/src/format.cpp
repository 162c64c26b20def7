#include "metabelian/canonical.hpp"

namespace metab {

namespace {

template <class T, class F>
void append_powers(std::string& s, const std::vector<T>& items, F name) {
  for (std::size_t k = 0; k < items.size();) {
    std::size_t run = 1;
    while (k + run < items.size() && items[k + run] == items[k]) ++run;
    if (!s.empty()) s += '*';
    s += name(items[k]);
    if (run > 1) s += '^' + std::to_string(run);
    k += run;
  }
}

template <class Word>
std::string combination_string(const Combination<Word>& e) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const std::string body = to_string(w);
    if (body == "1") {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + '*';
      s += body;
    }
  }
  return s;
}

}  // namespace

std::string to_string(const UGen& u) { return "u(" + std::to_string(u.p) + "," + std::to_string(u.q) + ")"; }

std::string to_string(const WGen& w) { return "w(" + std::to_string(w.p) + "," + std::to_string(w.q) + ")"; }

std::string to_string(const ConstantWord& w) {
  std::string s;
  append_powers(s, w.xs, [](int i) { return "x" + std::to_string(i); });
  append_powers(s, w.us, [](const UGen& u) { return to_string(u); });
  return s.empty() ? "1" : s;
}

std::string to_string(const ModuleWord& w) {
  std::string s = std::holds_alternative<AHead>(w.head) ? "a" + std::to_string(std::get<AHead>(w.head).i)
                                                        : to_string(std::get<WGen>(w.head));
  if (w.tail.degree() > 0) s += '*' + to_string(w.tail);
  return s;
}

std::string to_string(const FormalScalar& e) { return combination_string(e); }

std::string to_string(const FormalModuleElement& e) { return combination_string(e); }

}  // namespace metab
