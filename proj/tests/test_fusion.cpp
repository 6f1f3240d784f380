#include <gtest/gtest.h>

#include "hopfcat/corpus.hpp"
#include "hopfcat/fusion.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hopfcat;
using namespace hopfcat::testing;

template <class K>
class FusionTest : public ::testing::Test {};
using Fields = ::testing::Types<Rational, ModP>;
TYPED_TEST_SUITE(FusionTest, Fields);

template <class K>
std::vector<std::pair<std::string, Bimonoid<K>>> bimonoid_corpus() {
  return corpus::bimonoids<K>();
}

TYPED_TEST(FusionTest, GaloisC2IsTheSwapOfGTensorOneAndGTensorG) {
  using K = TypeParam;
  const auto f = fusion_operator(corpus::c2_group_algebra<K>(), FusionSide::galois).mat;
  EXPECT_EQ(f, Matrix<K>::from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
}

TYPED_TEST(FusionTest, Paper46C2ByHand) {
  using K = TypeParam;
  // h (x) h' -> h h' (x) h on group-likes: 1(x)g -> g(x)1, g(x)1 -> g(x)g, g(x)g -> 1(x)g
  const auto f = fusion_operator(corpus::c2_group_algebra<K>(), FusionSide::paper46).mat;
  EXPECT_EQ(f, Matrix<K>::from_ints({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
}

TYPED_TEST(FusionTest, Paper46SweedlerByHand) {
  using K = TypeParam;
  // x (x) 1 -> x(1) 1 (x) x(2) = x (x) 1 + g (x) x
  const auto f = fusion_operator(corpus::sweedler_h4<K>(), FusionSide::paper46).mat;
  const std::size_t col = 2 * 4 + 0;
  EXPECT_EQ(f.at(2 * 4 + 0, col), K(1));
  EXPECT_EQ(f.at(1 * 4 + 2, col), K(1));
  EXPECT_EQ(f.column(col).size(), 2u);
  // 1 (x) x -> x (x) 1
  EXPECT_EQ(f.column(0 * 4 + 2).size(), 1u);
  EXPECT_EQ(f.at(2 * 4 + 0, 0 * 4 + 2), K(1));
}

TYPED_TEST(FusionTest, GaloisIdempotentIsSingular) {
  using K = TypeParam;
  const auto f = fusion_operator(corpus::idempotent_monoid_algebra<K>(), FusionSide::galois).mat;
  // e (x) 1 -> e (x) e and e (x) e -> e (x) e
  EXPECT_EQ(f.at(3, 2), K(1));
  EXPECT_EQ(f.column(2).size(), 1u);
  EXPECT_EQ(f.at(3, 3), K(1));
  EXPECT_EQ(f.column(3).size(), 1u);
  EXPECT_EQ(rank(f), 3u);
  EXPECT_EQ(dense_rank(f.dense_rows()), 3u);
}

TYPED_TEST(FusionTest, UnitRowActsAsIdentity) {
  using K = TypeParam;
  for (const auto& [name, h] : bimonoid_corpus<K>()) {
    const std::size_t n = h.dim();
    const std::size_t one = h.eta().column(0).front().first;
    for (auto side : {FusionSide::galois, FusionSide::paper46}) {
      const auto f = fusion_operator(h, side).mat;
      for (std::size_t j = 0; j < n; ++j) {
        // 1 (x) e_j goes to 1 (x) e_j (galois) or e_j (x) 1 (paper46)
        const std::size_t target = side == FusionSide::galois ? one * n + j : j * n + one;
        ASSERT_EQ(f.column(one * n + j).size(), 1u) << name;
        EXPECT_EQ(f.at(target, one * n + j), K(1)) << name;
      }
    }
  }
}

TYPED_TEST(FusionTest, HopfVerdicts) {
  using K = TypeParam;
  EXPECT_TRUE(is_right_hopf(corpus::c2_group_algebra<K>()));
  EXPECT_TRUE(is_right_hopf(corpus::s3_group_algebra<K>()));
  EXPECT_TRUE(is_right_hopf(corpus::sweedler_h4<K>()));
  EXPECT_TRUE(is_right_hopf(corpus::unit_bimonoid<K>()));
  EXPECT_FALSE(is_right_hopf(corpus::idempotent_monoid_algebra<K>()));
  const auto f = fusion_operator(corpus::sweedler_h4<K>(), FusionSide::paper46).mat;
  EXPECT_EQ(dense_rank(f.dense_rows()), 16u);
}

TYPED_TEST(FusionTest, AntipodeExamples) {
  using K = TypeParam;
  const auto c2 = corpus::c2_group_algebra<K>();
  EXPECT_EQ(extract_antipode(c2).s.mat, Matrix<K>::identity(2));
  const auto h4 = corpus::sweedler_h4<K>();
  const auto cert = extract_antipode(h4);
  EXPECT_EQ(cert.s.mat, corpus::sweedler_antipode<K>());
  // S(x) = -gx
  EXPECT_EQ(cert.s.mat.column(2).size(), 1u);
  EXPECT_EQ(cert.s.mat.at(3, 2), K(-1));
  EXPECT_NE(cert.s.mat * cert.s.mat, Matrix<K>::identity(4));
  EXPECT_TRUE(cert.side_checks[0] && cert.side_checks[1]);
  try {
    extract_antipode(corpus::idempotent_monoid_algebra<K>());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::no_antipode);
  }
}

TYPED_TEST(FusionTest, AntipodeMatchesBruteForceOracle) {
  using K = TypeParam;
  for (const auto& [name, h] : bimonoid_corpus<K>()) {
    bool unique = false;
    const auto oracle = oracle_antipode(h, &unique);
    bool extracted = false;
    try {
      const auto cert = extract_antipode(h);
      extracted = true;
      ASSERT_TRUE(oracle.has_value()) << name;
      EXPECT_TRUE(unique) << name;
      EXPECT_EQ(cert.s.mat.dense_rows(), *oracle) << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::no_antipode) << name;
    }
    EXPECT_EQ(extracted, oracle.has_value()) << name;
  }
}

TYPED_TEST(FusionTest, CheckAntipode) {
  using K = TypeParam;
  const auto c2 = corpus::c2_group_algebra<K>();
  const auto x = c2.carrier();
  EXPECT_TRUE(check_antipode(c2, MorphismV<K>::identity(x)).passed());
  const auto neg = check_antipode(c2, MorphismV<K>(x, x, -Matrix<K>::identity(2)));
  EXPECT_FALSE(neg.passed("left_convolution"));
  EXPECT_FALSE(neg.passed("right_convolution"));
  const auto h4 = corpus::sweedler_h4<K>();
  EXPECT_TRUE(check_antipode(h4, extract_antipode(h4).s).passed());
  EXPECT_THROW(check_antipode(h4, MorphismV<K>::identity(x)), Error);
}

TYPED_TEST(FusionTest, VerdictsAgreeAcrossRoutes) {
  using K = TypeParam;
  for (const auto& [name, h] : bimonoid_corpus<K>()) {
    const bool hopf = is_right_hopf(h);
    const bool galois = is_invertible(fusion_operator(h, FusionSide::galois).mat);
    bool antipode = true;
    try {
      const auto cert = extract_antipode(h);
      const auto inv = galois_inverse(h, cert.s.mat);
      const auto f = fusion_operator(h, FusionSide::galois).mat;
      EXPECT_EQ(inv * f, Matrix<K>::identity(h.dim() * h.dim())) << name;
      EXPECT_EQ(f * inv, Matrix<K>::identity(h.dim() * h.dim())) << name;
      EXPECT_TRUE(is_anti_homomorphism(h, cert.s.mat)) << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::no_antipode);
      antipode = false;
    }
    EXPECT_EQ(hopf, galois) << name;
    EXPECT_EQ(hopf, antipode) << name;
  }
}

TYPED_TEST(FusionTest, NonBimonoidRejected) {
  using K = TypeParam;
  auto h = corpus::c2_group_algebra<K>();
  h.comonoid = Comonoid<K>(h.carrier(), corpus::divided_power_comonoid<K>().delta.mat,
                           corpus::divided_power_comonoid<K>().epsilon.mat);
  try {
    fusion_operator(h, FusionSide::galois);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::axiom_violation);
  }
}
