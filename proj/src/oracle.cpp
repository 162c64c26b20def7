#include "metabelian/oracle.hpp"

#include <functional>
#include <future>

#include "metabelian/weitzenbock.hpp"

namespace metab {

namespace {

void check_cap(std::size_t ambient, const OracleOptions& opts) {
  if (ambient > opts.max_ambient)
    throw DomainError("ambient dimension " + std::to_string(ambient) + " exceeds the cap of " +
                      std::to_string(opts.max_ambient));
}

/// Accumulates the matrix of a linear map column by column and returns its
/// rows, one per target coordinate.
class RowCollector {
 public:
  explicit RowCollector(std::size_t targets) : rows_(targets) {}

  void add_column(std::size_t source, const linalg::RationalRow& image, std::size_t offset = 0) {
    for (const auto& [t, c] : image) rows_[offset + t].emplace_back(source, c);
  }

  linalg::FractionFreeEchelon echelon(std::size_t sources) const {
    linalg::FractionFreeEchelon ech(sources);
    for (const auto& r : rows_)
      if (!r.empty()) ech.insert(r);
    return ech;
  }

 private:
  std::vector<linalg::RationalRow> rows_;
};

KernelReport report_from(int n, std::size_t ambient, const linalg::FractionFreeEchelon& ech) {
  KernelReport rep;
  rep.degree = n;
  rep.ambient_dim = ambient;
  rep.basis = ech.nullspace();
  rep.kernel_dim = rep.basis.size();
  return rep;
}

std::size_t shift_fixed_dimension(int d, int n) {
  const PolyBasis basis(d, n);
  RowCollector rows(basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const Poly m = Poly::monomial(basis.elements()[s]);
    rows.add_column(s, basis.coordinates(shift_action(m, 1) - m));
  }
  return basis.size() - rows.echelon(basis.size()).rank();
}

/// Runs `one` for n = first..max_degree.  The largest degree has the largest
/// ambient space, so the cap is checked against it before any work starts.
GradedReport run_degrees(std::string command, int d, int first, int max_degree, const OracleOptions& opts,
                         std::size_t (*ambient)(int, int), const std::function<DegreeResult(int)>& one) {
  check_rank(d);
  if (max_degree >= first) check_cap(ambient(d, max_degree), opts);
  GradedReport rep{std::move(command), d, max_degree, {}};
  if (opts.parallel) {
    std::vector<std::future<DegreeResult>> jobs;
    for (int n = first; n <= max_degree; ++n) jobs.push_back(std::async(std::launch::async, one, n));
    for (auto& j : jobs) rep.degrees.push_back(j.get());
  } else {
    for (int n = first; n <= max_degree; ++n) rep.degrees.push_back(one(n));
  }
  return rep;
}

}  // namespace

KernelReport kernel_basis_poly(int d, int n, const OracleOptions& opts) {
  check_rank(d);
  check_cap(poly_dimension(d, n), opts);
  const PolyBasis basis(d, n);
  RowCollector rows(basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s)
    rows.add_column(s, basis.coordinates(delta(Poly::monomial(basis.elements()[s]))));
  return report_from(n, basis.size(), rows.echelon(basis.size()));
}

std::vector<Poly> kernel_polys(int d, const KernelReport& report) {
  const PolyBasis basis(d, report.degree);
  std::vector<Poly> out;
  for (const auto& v : report.basis) out.push_back(basis.element(v));
  return out;
}

KernelReport lie_constants_basis(int d, int n, const OracleOptions& opts) {
  check_rank(d);
  if (n < 2) return KernelReport{n, module_dimension(d, n), 0, {}};
  check_cap(module_dimension(d, n), opts);
  const ModuleBasis ambient(d, n);
  const PolyBasis criterion(d, n);
  RowCollector rows(ambient.size() + criterion.size());
  for (std::size_t s = 0; s < ambient.size(); ++s) {
    const auto& [g, m] = ambient.elements()[s];
    const WreathElement e = WreathElement::module(g, Poly::monomial(m));
    rows.add_column(s, ambient.coordinates(delta(e)));
    rows.add_column(s, criterion.coordinates(lie_criterion(e)), ambient.size());
  }
  return report_from(n, ambient.size(), rows.echelon(ambient.size()));
}

std::vector<WreathElement> kernel_elements(int d, const KernelReport& report) {
  const ModuleBasis basis(d, report.degree);
  std::vector<WreathElement> out;
  for (const auto& v : report.basis) out.push_back(basis.element(v));
  return out;
}

std::vector<ConstantWord> all_constant_products(int d, int n) {
  check_rank(d);
  std::vector<ConstantWord> out;
  if (n < 0) return out;
  std::vector<UGen> intervals;
  for (int p = 1; p <= d; ++p)
    for (int q = p + 1; q <= d; ++q) intervals.emplace_back(p, q);
  std::vector<int> xs;
  std::vector<UGen> us;
  std::function<void(int, int)> pick_x = [&](int from, int left) {
    if (left == 0) {
      out.emplace_back(xs, us);
      return;
    }
    for (int i = from; i <= d; ++i) {
      xs.push_back(i);
      pick_x(i, left - 1);
      xs.pop_back();
    }
  };
  std::function<void(std::size_t, int)> pick_u = [&](std::size_t from, int left) {
    pick_x(1, left);
    for (std::size_t k = from; k < intervals.size() && left >= 2; ++k) {
      us.push_back(intervals[k]);
      pick_u(k, left - 2);
      us.pop_back();
    }
  };
  pick_u(0, n);
  return out;
}

std::size_t product_span_rank(int d, int n, const OracleOptions& opts) {
  check_cap(poly_dimension(d, n), opts);
  const PolyBasis basis(d, n);
  linalg::FractionFreeEchelon ech(basis.size());
  for (const auto& w : all_constant_products(d, n)) ech.insert(basis.coordinates(expand(d, w)));
  return ech.rank();
}

std::size_t module_generated_dimension(const std::vector<WreathElement>& generators, int d, int n,
                                       const OracleOptions& opts) {
  check_rank(d);
  if (generators.empty() || n < 1) return 0;
  check_cap(module_dimension(d, n), opts);
  const ModuleBasis ambient(d, n);
  linalg::FractionFreeEchelon ech(ambient.size());
  std::map<int, std::vector<Poly>> multipliers;
  for (const auto& g : generators) {
    check_same_rank(d, g.rank());
    if (g.is_zero()) continue;
    if (!g.in_module() || !g.is_homogeneous()) throw DomainError("generators must be homogeneous elements of C");
    const int k = g.degree();
    if (k > n) continue;
    auto it = multipliers.find(n - k);
    if (it == multipliers.end()) {
      std::vector<Poly> ms;
      for (const auto& w : all_constant_products(d, n - k)) ms.push_back(expand(d, w));
      it = multipliers.emplace(n - k, std::move(ms)).first;
    }
    for (const auto& m : it->second) ech.insert(ambient.coordinates(module_action(g, m)));
  }
  return ech.rank();
}

bool GradedReport::pass() const {
  for (const auto& r : degrees)
    if (!r.pass) return false;
  return true;
}

GradedReport verify_nowicki(int d, int max_degree, const OracleOptions& opts) {
  return run_degrees("verify-nowicki", d, 1, max_degree, opts, poly_dimension, [&](int n) {
    const std::size_t kernel = kernel_basis_poly(d, n, opts).kernel_dim;
    const std::size_t count = canonical_constant_words(d, n).size();
    const std::size_t span = product_span_rank(d, n, opts);
    return DegreeResult{n, kernel, count, kernel == count && count == span,
                        {{"kernel_dim", kernel}, {"basis_count", count}, {"span_rank", span}}};
  });
}

GradedReport verify_main_theorem(int d, int max_degree, const OracleOptions& opts) {
  std::vector<WreathElement> gens;
  for (auto& [lie, el] : corollary_generators(d)) gens.push_back(embed(lie));
  return run_degrees("verify-corollary", d, 2, max_degree, opts, module_dimension, [&, gens](int n) {
    const KernelReport lie = lie_constants_basis(d, n, opts);
    const std::size_t generated = module_generated_dimension(gens, d, n, opts);
    std::size_t failures = 0;
    for (const auto& c : kernel_elements(d, lie)) {
      const LMembership m = membership_in_L(c);
      if (!m.in_L() || !m.lie) ++failures;
    }
    return DegreeResult{n,
                        lie.kernel_dim,
                        generated,
                        lie.kernel_dim == generated && failures == 0,
                        {{"lie_constants_dim", lie.kernel_dim},
                         {"generated_dim", generated},
                         {"vectors_checked", lie.kernel_dim},
                         {"not_in_L", failures}}};
  });
}

GradedReport kernel_dimensions(int d, int max_degree, const OracleOptions& opts) {
  return run_degrees("kernel-dim", d, 0, max_degree, opts, module_dimension, [&](int n) {
    const std::size_t kernel = kernel_basis_poly(d, n, opts).kernel_dim;
    const std::size_t fixed = shift_fixed_dimension(d, n);
    const std::size_t lie = lie_constants_basis(d, n, opts).kernel_dim;
    return DegreeResult{n, kernel, fixed, kernel == fixed,
                        {{"kernel_dim", kernel}, {"shift_fixed_dim", fixed}, {"lie_constants_dim", lie}}};
  });
}

}  // namespace metab
