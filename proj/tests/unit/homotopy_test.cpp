#include <bracealg/errors.hpp>
#include <bracealg/homotopy.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace bracealg;

namespace {

// span{a, b}, a.a = a, a.b = b, b.a = b.b = 0.
MultiMap left_unit_algebra(const SpacePtr& v) {
  MultiMap mu(v, 2, 0);
  mu.add_entry({0, 0}, 0, 1);
  mu.add_entry({0, 1}, 1, 1);
  return mu;
}

}  // namespace

TEST(StructureFamily, Validation) {
  const auto v = make_space({{"a", 0}, {"b", 0}});
  EXPECT_THROW(StructureFamily(v, {MultiMap(v, 2, 1)}, StructureFlavor::kAInfinity), InputError);
  EXPECT_THROW(StructureFamily(v, {MultiMap(v, 2, 0), MultiMap(v, 2, 0)}, StructureFlavor::kAInfinity),
               InputError);
  EXPECT_THROW(StructureFamily(v, {left_unit_algebra(v)}, StructureFlavor::kLInfinity), InputError);
  const StructureFamily ok(v, {left_unit_algebra(v)}, StructureFlavor::kAInfinity);
  EXPECT_NE(ok.component(2), nullptr);
  EXPECT_EQ(ok.component(1), nullptr);
}

TEST(AInfinity, AssociativeProducts) {
  const auto line = make_space({{"e", 0}});
  MultiMap e(line, 2, 0);
  e.add_entry({0, 0}, 0, 1);
  EXPECT_TRUE(check_a_infinity(StructureFamily(line, {e}, StructureFlavor::kAInfinity), 3));

  const auto v = make_space({{"a", 0}, {"b", 0}});
  const auto mu = left_unit_algebra(v);
  ASSERT_TRUE(oracle::associative(mu));
  const auto verdict = check_a_infinity(StructureFamily(v, {mu}, StructureFlavor::kAInfinity), 3);
  EXPECT_TRUE(verdict);
  EXPECT_EQ(verdict.verified_up_to, 3);
}

TEST(AInfinity, ZeroFamily) {
  const auto v = make_space({{"a", 0}, {"b", 1}});
  EXPECT_TRUE(check_a_infinity(StructureFamily(v, {}, StructureFlavor::kAInfinity), 4));
  EXPECT_TRUE(check_l_infinity(StructureFamily(v, {}, StructureFlavor::kLInfinity), 4));
  EXPECT_TRUE(antisymmetrize_structure(StructureFamily(v, {}, StructureFlavor::kAInfinity))
                  .components()
                  .empty());
}

TEST(AInfinity, NonAssociativeProductFails) {
  const auto v = make_space({{"a", 0}, {"b", 0}});
  MultiMap mu(v, 2, 0);
  mu.add_entry({0, 0}, 1, 1);  // a.a = b
  mu.add_entry({1, 0}, 0, 1);  // b.a = a
  ASSERT_FALSE(oracle::associative(mu));
  const auto verdict = check_a_infinity(StructureFamily(v, {mu}, StructureFlavor::kAInfinity), 3);
  EXPECT_FALSE(verdict);
  EXPECT_EQ(verdict.failing_arity, 3);
  ASSERT_TRUE(verdict.verdict.counterexample.has_value());
  EXPECT_EQ(verdict.verdict.counterexample->input.size(), 3u);
}

TEST(AInfinity, AgreesWithAssociativityOracle) {
  oracle::Rng rng(40);
  int associative = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto v = oracle::random_space(rng, rng.uniform(1, 2), 0, 0);
    MultiMap mu(v, 2, 0);
    for (const auto& t : oracle::all_tuples(v->dimension(), 2))
      for (int j = 0; j < v->dimension(); ++j)
        if (rng.uniform(0, 2) == 0) mu.add_entry(t, j, 1);
    const bool expected = oracle::associative(mu);
    associative += expected;
    EXPECT_EQ(static_cast<bool>(check_a_infinity(
                  StructureFamily(v, {mu}, StructureFlavor::kAInfinity), 3)),
              expected);
  }
  EXPECT_GT(associative, 0);
}

TEST(LInfinity, CommutatorSatisfiesJacobi) {
  const auto v = make_space({{"a", 0}, {"b", 0}});
  const auto l2 = oracle::commutator(left_unit_algebra(v));
  ASSERT_TRUE(oracle::jacobi(l2));
  EXPECT_TRUE(check_l_infinity(StructureFamily(v, {l2}, StructureFlavor::kLInfinity), 3));
}

TEST(LInfinity, AgreesWithJacobiOracle) {
  oracle::Rng rng(41);
  int jacobi = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto v = oracle::random_space(rng, 2, 0, 1);
    auto raw = oracle::random_map(rng, v, 2);
    if (raw.degree() != 0) continue;
    const auto l2 = antisymmetrize(raw);
    const bool expected = oracle::jacobi(l2);
    jacobi += expected;
    EXPECT_EQ(static_cast<bool>(check_l_infinity(
                  StructureFamily(v, {l2}, StructureFlavor::kLInfinity), 3)),
              expected);
  }
  EXPECT_GT(jacobi, 0);
}

TEST(LInfinity, DifferentialWithNonzeroSquareFails) {
  // Chain c -> b -> a with degrees 2, 1, 0 and l1 of degree -1.
  const auto v = make_space({{"a", 0}, {"b", 1}, {"c", 2}});
  MultiMap l1(v, 1, -1);
  l1.add_entry({2}, 1, 1);
  l1.add_entry({1}, 0, 1);
  const auto verdict = check_l_infinity(StructureFamily(v, {l1}, StructureFlavor::kLInfinity), 2);
  EXPECT_FALSE(verdict);
  EXPECT_EQ(verdict.failing_arity, 1);

  MultiMap square_zero(v, 1, -1);
  square_zero.add_entry({1}, 0, 1);
  EXPECT_TRUE(check_l_infinity(StructureFamily(v, {square_zero}, StructureFlavor::kLInfinity), 2));
}

TEST(AntisymmetrizedStructure, LeftUnitAlgebra) {
  const auto v = make_space({{"a", 0}, {"b", 0}});
  const StructureFamily family(v, {left_unit_algebra(v)}, StructureFlavor::kAInfinity);
  const auto l = antisymmetrize_structure(family);
  ASSERT_NE(l.component(2), nullptr);
  EXPECT_TRUE(equals(*l.component(2), oracle::commutator(left_unit_algebra(v))));
  EXPECT_TRUE(check_antisymmetrized_structure(family, 3));
}

TEST(AntisymmetrizedStructure, UnaryComponentUnchanged) {
  const auto v = make_space({{"a", 0}, {"b", 1}});
  MultiMap d(v, 1, -1);
  d.add_entry({1}, 0, 1);
  const StructureFamily family(v, {d}, StructureFlavor::kAInfinity);
  EXPECT_TRUE(equals(*antisymmetrize_structure(family).component(1), d));
  EXPECT_TRUE(check_antisymmetrized_structure(family, 3));
}

TEST(AntisymmetrizedStructure, CommutativeAlgebraGivesZeroBracket) {
  const auto v = make_space({{"e", 0}});
  MultiMap mu(v, 2, 0);
  mu.add_entry({0, 0}, 0, 1);
  const auto l = antisymmetrize_structure(StructureFamily(v, {mu}, StructureFlavor::kAInfinity));
  EXPECT_TRUE(l.component(2) == nullptr || l.component(2)->is_zero());
}

TEST(AntisymmetrizedStructure, RequiresAInfinityInput) {
  const auto v = make_space({{"a", 0}, {"b", 0}});
  MultiMap mu(v, 2, 0);
  mu.add_entry({0, 0}, 1, 1);
  mu.add_entry({1, 0}, 0, 1);
  EXPECT_THROW(check_antisymmetrized_structure(StructureFamily(v, {mu}, StructureFlavor::kAInfinity), 3),
               InputError);
}
