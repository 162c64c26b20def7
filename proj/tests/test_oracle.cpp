#include <gtest/gtest.h>

#include "metabelian/oracle.hpp"
#include "metabelian/weitzenbock.hpp"

using namespace metab;

// Dimensions below were computed by an independent dense elimination in a
// separate computer algebra system and frozen here.

TEST(Oracle, PolynomialKernelDimensions) {
  const std::vector<std::size_t> d2{1, 2, 4, 6, 9, 12, 16, 20, 25};
  const std::vector<std::size_t> d3{1, 3, 9, 18, 36, 60};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(kernel_basis_poly(1, n).kernel_dim, 1u);
  for (std::size_t n = 0; n < d2.size(); ++n) EXPECT_EQ(kernel_basis_poly(2, static_cast<int>(n)).kernel_dim, d2[n]);
  for (std::size_t n = 0; n < d3.size(); ++n) EXPECT_EQ(kernel_basis_poly(3, static_cast<int>(n)).kernel_dim, d3[n]);
}

TEST(Oracle, PinnedDegreeTwo) {
  const KernelReport r = kernel_basis_poly(2, 2);
  EXPECT_EQ(r.ambient_dim, 10u);
  EXPECT_EQ(r.kernel_dim, 4u);
  for (const auto& p : kernel_polys(2, r)) EXPECT_TRUE(is_constant(p));
}

TEST(Oracle, LieConstantDimensions) {
  const std::vector<std::size_t> d2{4, 8, 15, 22, 32};
  const std::vector<std::size_t> d3{9, 27, 72};
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(lie_constants_basis(1, n).kernel_dim, 1u);
  for (std::size_t k = 0; k < d2.size(); ++k) EXPECT_EQ(lie_constants_basis(2, static_cast<int>(k) + 2).kernel_dim, d2[k]);
  for (std::size_t k = 0; k < d3.size(); ++k) EXPECT_EQ(lie_constants_basis(3, static_cast<int>(k) + 2).kernel_dim, d3[k]);
  EXPECT_EQ(lie_constants_basis(2, 1).kernel_dim, 0u);
}

TEST(Oracle, LieConstantsOfRankOneAreMultiplesOfW11) {
  const auto basis = kernel_elements(1, lie_constants_basis(1, 2));
  ASSERT_EQ(basis.size(), 1u);
  const WreathElement w11 = expand_w(1, WGen{1, 1});
  // basis[0] = c * w11 for some rational c.
  const Rational c = basis[0].coefficient(agen(1)).coefficient(Monomial::of(1, yvar(1)));
  ASSERT_NE(c, 0);
  EXPECT_EQ(basis[0], w11 * c);
}

TEST(Oracle, KernelVectorsAreConstantsAndLieElements) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& c : kernel_elements(2, lie_constants_basis(2, n))) {
      EXPECT_TRUE(is_constant(c));
      EXPECT_TRUE(is_lie_element(c));
      EXPECT_TRUE(c.is_homogeneous());
      EXPECT_EQ(c.degree(), n);
    }
}

TEST(Oracle, ProductSpanMatchesKernel) {
  for (int d = 1; d <= 3; ++d)
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(product_span_rank(d, n), kernel_basis_poly(d, n).kernel_dim);
}

TEST(Oracle, AmbientCapIsEnforced) {
  OracleOptions tiny;
  tiny.max_ambient = 5;
  EXPECT_THROW(kernel_basis_poly(2, 2, tiny), DomainError);
  EXPECT_THROW(lie_constants_basis(2, 2, tiny), DomainError);
  EXPECT_THROW(verify_nowicki(2, 2, tiny), DomainError);
  EXPECT_NO_THROW(verify_nowicki(2, 1, tiny));
  OracleOptions defaults;
  EXPECT_THROW(verify_main_theorem(6, 8, defaults), DomainError);
}

TEST(Oracle, ReportsPass) {
  EXPECT_TRUE(verify_nowicki(2, 5).pass());
  EXPECT_TRUE(verify_main_theorem(2, 4).pass());
  OracleOptions par;
  par.parallel = true;
  const GradedReport p = verify_main_theorem(2, 4, par);
  const GradedReport s = verify_main_theorem(2, 4);
  ASSERT_EQ(p.degrees.size(), s.degrees.size());
  for (std::size_t k = 0; k < p.degrees.size(); ++k) EXPECT_EQ(p.degrees[k].details, s.degrees[k].details);
  const GradedReport k = kernel_dimensions(3, 3);
  EXPECT_TRUE(k.pass());
  EXPECT_EQ(k.degrees.front().n, 0);
}

namespace {

std::size_t generated_without(const std::string& families, int d, int n) {
  std::vector<WreathElement> gens;
  for (const auto& g : L_generators(d))
    if (families.find(g.family) == std::string::npos) gens.push_back(g.element);
  return module_generated_dimension(gens, d, n);
}

}  // namespace

TEST(Oracle, DroppingGeneratorFamilies) {
  const std::size_t full = lie_constants_basis(3, 3).kernel_dim;
  EXPECT_EQ(generated_without("", 3, 3), full);
  EXPECT_EQ(generated_without("g1", 3, 3), 24u);
  EXPECT_EQ(generated_without("g2", 3, 3), 23u);
  EXPECT_EQ(generated_without("g3", 3, 3), 19u);
  // Each of the families of degree >= 3 is covered by the rest, but not all
  // three together.
  EXPECT_EQ(generated_without("g4", 3, 3), full);
  EXPECT_EQ(generated_without("g5", 3, 3), full);
  EXPECT_EQ(generated_without("g6", 3, 3), full);
  EXPECT_EQ(generated_without("g4 g5 g6", 3, 3), full - 1);
}
