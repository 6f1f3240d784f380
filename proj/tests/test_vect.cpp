#include <gtest/gtest.h>

#include "hopfcat/vect.hpp"
#include "support.hpp"

using namespace hopfcat;
using namespace hopfcat::testing;

TEST(Vect, TensorObjects) {
  const auto y = VectObject::graded({1, 0, 1});
  EXPECT_EQ(tensor_objects(VectObject::unit(), y), y);
  const auto x = VectObject::graded({0, 1});
  EXPECT_EQ(tensor_objects(x, x).parity, (Parity{0, 1, 1, 0}));
  EXPECT_EQ(tensor_objects(VectObject::even(3), VectObject::even(2)).dim, 6u);
}

TEST(Vect, BraidingExamples) {
  const auto x = VectObject::even(2);
  const auto c = braiding<Rational>(x, x, BraidingKind::symmetric);
  EXPECT_EQ(c.mat, Matrix<Rational>::from_ints({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
  const auto odd = VectObject::graded({1});
  EXPECT_EQ(braiding<Rational>(odd, odd, BraidingKind::super).mat, Matrix<Rational>::from_ints({{-1}}));
}

TEST(Vect, SuperBraidingInCharacteristicTwoNeedsAcknowledgement) {
  EXPECT_THROW(validate_braiding(BraidingKind::super, FieldSpec::prime(2)), Error);
  EXPECT_NO_THROW(validate_braiding(BraidingKind::super, FieldSpec::prime(2), true));
  EXPECT_NO_THROW(validate_braiding(BraidingKind::super, FieldSpec::prime(5)));
}

template <class K>
class VectTest : public ::testing::Test {};
using Fields = ::testing::Types<Rational, ModP>;
TYPED_TEST_SUITE(VectTest, Fields);

TYPED_TEST(VectTest, HexagonOnThreeObjects) {
  using K = TypeParam;
  const std::vector<VectObject> objs{VectObject::graded({0, 1}), VectObject::graded({1, 1}),
                                     VectObject::graded({1, 0})};
  for (auto kind : {BraidingKind::symmetric, BraidingKind::super}) {
    const auto& [a, b, c] = std::tie(objs[0], objs[1], objs[2]);
    auto I = [](const VectObject& o) { return Matrix<K>::identity(o.dim); };
    // (c_bc (x) 1)... written on a (x) b (x) c -> c (x) b (x) a both ways
    const auto lhs = kron(braiding<K>(b, c, kind).mat, I(a)) * kron(I(b), braiding<K>(a, c, kind).mat) *
                     kron(braiding<K>(a, b, kind).mat, I(c));
    const auto rhs = kron(I(c), braiding<K>(a, b, kind).mat) * kron(braiding<K>(a, c, kind).mat, I(b)) *
                     kron(I(a), braiding<K>(b, c, kind).mat);
    EXPECT_EQ(lhs, rhs);
    // the leg-permutation route agrees
    EXPECT_EQ(lhs, permutation_matrix<K>(leg_dims(objs), {2, 1, 0}, leg_parities(objs, kind)));
  }
}

TYPED_TEST(VectTest, BraidingIsInvolutiveAndNatural) {
  using K = TypeParam;
  Gen gen(4);
  const auto x = VectObject::graded({0, 1, 1});
  const auto y = VectObject::graded({1, 0});
  for (auto kind : {BraidingKind::symmetric, BraidingKind::super}) {
    const auto cxy = braiding<K>(x, y, kind);
    const auto cyx = braiding<K>(y, x, kind);
    EXPECT_EQ(compose(cyx, cxy).mat, Matrix<K>::identity(6));
    for (int trial = 0; trial < 10; ++trial) {
      // random parity-preserving endomorphisms
      auto mx = gen.template matrix<K>(3, 3, 0);
      auto my = gen.template matrix<K>(2, 2, 0);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (x.parity[i] != x.parity[j]) mx.set(i, j, K(0));
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          if (y.parity[i] != y.parity[j]) my.set(i, j, K(0));
      const MorphismV<K> f(x, x, mx), g(y, y, my);
      EXPECT_EQ(compose(cxy, tensor_morphisms(f, g)).mat, compose(tensor_morphisms(g, f), cxy).mat);
    }
  }
  const auto s = braiding<K>(x, y, BraidingKind::symmetric).mat;
  for (std::size_t j = 0; j < s.cols(); ++j) {
    ASSERT_EQ(s.column(j).size(), 1u);
    EXPECT_EQ(s.column(j).front().second, K(1));
  }
}

TYPED_TEST(VectTest, TensorMorphismExamples) {
  using K = TypeParam;
  Gen gen(6);
  const auto x = VectObject::even(2);
  const auto id = MorphismV<K>::identity(x);
  EXPECT_EQ(tensor_morphisms(id, id).mat, Matrix<K>::identity(4));
  for (int trial = 0; trial < 10; ++trial) {
    const MorphismV<K> f(x, x, gen.template matrix<K>(2, 2)), g(x, x, gen.template matrix<K>(2, 2));
    const MorphismV<K> f2(x, x, gen.template matrix<K>(2, 2)), g2(x, x, gen.template matrix<K>(2, 2));
    EXPECT_EQ(compose(tensor_morphisms(f, g), tensor_morphisms(f2, g2)).mat,
              tensor_morphisms(compose(f, f2), compose(g, g2)).mat);
  }
  const MorphismV<K> zero(VectObject::unit(), VectObject::unit(), Matrix<K>(1, 1));
  EXPECT_EQ(tensor_morphisms(id, zero).mat, Matrix<K>(2, 2));
}

TYPED_TEST(VectTest, ParityPreservationEnforced) {
  using K = TypeParam;
  const auto x = VectObject::graded({0, 1});
  EXPECT_THROW(MorphismV<K>(x, x, Matrix<K>::from_ints({{0, 1}, {1, 0}})), Error);
  EXPECT_THROW(MorphismV<K>(x, x, Matrix<K>(3, 2)), Error);
}

TYPED_TEST(VectTest, LegOperationsMatchKron) {
  using K = TypeParam;
  Gen gen(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = gen.template matrix<K>(12, 3);
    const auto f = gen.template matrix<K>(4, 3);
    EXPECT_EQ(apply_on_leg(x, {2, 3, 2}, 1, f),
              kron(Matrix<K>::identity(2), f, Matrix<K>::identity(2)) * x);
    const auto y = gen.template matrix<K>(3, 12);
    const auto g = gen.template matrix<K>(3, 2);
    EXPECT_EQ(apply_block_right(y, 2, 2, g), y * kron(Matrix<K>::identity(2), g, Matrix<K>::identity(2)));
  }
}
