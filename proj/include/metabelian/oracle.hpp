#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "metabelian/canonical.hpp"
#include "metabelian/graded.hpp"

namespace metab {

struct OracleOptions {
  /// Refuse configurations whose ambient space is larger than this.
  std::size_t max_ambient = 200'000;
  /// Run independent degrees concurrently in the verify_* drivers.
  bool parallel = false;
};

/// Exact kernel of a linear map restricted to one degree.
struct KernelReport {
  int degree = 0;
  std::size_t ambient_dim = 0;
  std::size_t kernel_dim = 0;
  /// Kernel basis in ambient coordinates (PolyBasis or ModuleBasis order).
  std::vector<linalg::RationalRow> basis;
};

/// Kernel of delta on the degree-n polynomials.
KernelReport kernel_basis_poly(int d, int n, const OracleOptions& opts = {});
std::vector<Poly> kernel_polys(int d, const KernelReport& report);

/// Degree-n elements c of C with delta(c) = 0 and sum x_i f_i + sum y_i g_i = 0,
/// i.e. the constants of the commutator ideal.  Empty for n < 2.
KernelReport lie_constants_basis(int d, int n, const OracleOptions& opts = {});
std::vector<WreathElement> kernel_elements(int d, const KernelReport& report);

/// Every product x_{i_1}..x_{i_m} u_{k_1 l_1}..u_{k_s l_s} of degree n,
/// without any straightening restriction.
std::vector<ConstantWord> all_constant_products(int d, int n);

/// Rank of the expanded products of degree n.
std::size_t product_span_rank(int d, int n, const OracleOptions& opts = {});

/// Dimension of the degree-n part of the K[X_d,U]-module generated by the
/// given homogeneous elements of C.
std::size_t module_generated_dimension(const std::vector<WreathElement>& generators, int d, int n,
                                       const OracleOptions& opts = {});

struct DegreeResult {
  int n = 0;
  std::size_t expected = 0;
  std::size_t actual = 0;
  bool pass = false;
  /// Named quantities behind expected/actual, in report order.
  std::vector<std::pair<std::string, std::size_t>> details;
};

struct GradedReport {
  std::string command;
  int d = 0;
  int max_degree = 0;
  std::vector<DegreeResult> degrees;

  bool pass() const;
};

/// For n = 1..max_degree: kernel dimension of delta, the number of
/// canonical words and the rank of all x/u products must coincide.
GradedReport verify_nowicki(int d, int max_degree, const OracleOptions& opts = {});

/// For n = 2..max_degree: the Lie constants have the dimension of the module
/// generated by the bracket generators, and each oracle kernel vector
/// reduces to zero modulo L.
GradedReport verify_main_theorem(int d, int max_degree, const OracleOptions& opts = {});

/// Per-degree kernel dimensions of delta on polynomials and on Lie constants.
GradedReport kernel_dimensions(int d, int max_degree, const OracleOptions& opts = {});

}  // namespace metab
