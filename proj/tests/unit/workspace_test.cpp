#include <bracealg/errors.hpp>

#include <gtest/gtest.h>

#include "bracealg_cli/generate.hpp"
#include "bracealg_cli/workspace.hpp"

using namespace bracealg;
using namespace bracealg::cli;

namespace {

const char* kProduct = R"({
  "space": {"basis": [{"name": "a", "degree": 0}, {"name": "b", "degree": 1}]},
  "maps": [{"name": "mu", "arity": 2, "degree": 0, "entries": [
    {"in": ["b", "a"], "out": [{"basis": "b", "coeff": "2/4"}]},
    {"in": ["a", "a"], "out": [{"basis": "a", "coeff": "1"}]}
  ]}]
})";

}  // namespace

TEST(Workspace, MinimalFile) {
  const auto ws = parse_workspace_text(R"({"space": {"basis": [{"name": "e", "degree": 0}]}})");
  EXPECT_EQ(ws.space()->dimension(), 1);
  EXPECT_TRUE(ws.maps().empty());
}

TEST(Workspace, ParsesEntries) {
  const auto ws = parse_workspace_text(kProduct);
  const auto& mu = ws.map("mu");
  EXPECT_EQ(mu.arity(), 2);
  EXPECT_EQ(mu.value({1, 0}), SparseVector::basis(1, Scalar(1, 2)));
  EXPECT_THROW(ws.map("nu"), InputError);
}

TEST(Workspace, HomogeneityViolationNamesEntry) {
  const char* bad = R"({
    "space": {"basis": [{"name": "a", "degree": 0}, {"name": "b", "degree": 1}]},
    "maps": [{"name": "mu", "arity": 2, "degree": 0, "entries": [
      {"in": ["a", "a"], "out": [{"basis": "b", "coeff": "1"}]}]}]})";
  try {
    parse_workspace_text(bad);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("map 'mu' entry [a,a]"), std::string::npos) << e.what();
  }
}

TEST(Workspace, RejectsMalformedInput) {
  EXPECT_THROW(parse_workspace_text("{"), InputError);
  EXPECT_THROW(parse_workspace_text(R"({"maps": []})"), InputError);
  EXPECT_THROW(parse_workspace_text(R"({"space": {"basis": [{"name": "a", "degree": 0.5}]}})"), InputError);
  const std::string head = R"({"space": {"basis": [{"name": "a", "degree": 0}]}, "maps": [)";
  EXPECT_THROW(parse_workspace_text(head + R"({"name": "m", "arity": 0, "degree": 0, "entries": []}]})"),
               InputError);
  EXPECT_THROW(parse_workspace_text(head + R"({"name": "m", "arity": 1, "degree": 0, "entries": [
      {"in": ["z"], "out": []}]}]})"),
               InputError);
  EXPECT_THROW(parse_workspace_text(head + R"({"name": "m", "arity": 1, "degree": 0, "entries": [
      {"in": ["a"], "out": [{"basis": "a", "coeff": "1/0"}]}]}]})"),
               InputError);
  EXPECT_THROW(parse_workspace_text(head + R"({"name": "m", "arity": 1, "degree": 0, "entries": []},
      {"name": "m", "arity": 1, "degree": 0, "entries": []}]})"),
               InputError);
  EXPECT_THROW(parse_workspace("/nonexistent/ws.json"), InputError);
}

TEST(Workspace, CanonicalFormIsStable) {
  const auto once = serialize_workspace(parse_workspace_text(kProduct));
  EXPECT_EQ(serialize_workspace(parse_workspace_text(once)), once);
  // Entries sorted by input names, coefficients reduced.
  EXPECT_LT(once.find(R"("a",)"), once.find(R"("b",)"));
  EXPECT_NE(once.find(R"("coeff": "1/2")"), std::string::npos);
  EXPECT_EQ(once.back(), '\n');
}

TEST(Workspace, RoundTripsRandomMaps) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Workspace ws(random_space(rng, rng.uniform(1, 3), -2, 2));
    for (int m = 0; m < 3; ++m) ws.add_map("m" + std::to_string(m), random_map(rng, ws.space(), rng.uniform(1, 3)));
    const auto text = serialize_workspace(ws);
    const auto back = parse_workspace_text(text);
    ASSERT_EQ(back.maps().size(), ws.maps().size());
    for (std::size_t i = 0; i < ws.maps().size(); ++i) {
      EXPECT_EQ(back.maps()[i].first, ws.maps()[i].first);
      EXPECT_TRUE(equals(back.maps()[i].second, ws.maps()[i].second));
    }
    EXPECT_EQ(serialize_workspace(back), text);
  }
}

TEST(Generator, SplitMixIsDeterministic) {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) ASSERT_EQ(a.next(), b.next());
  // Reference values of the standard SplitMix64 stream from seed 0.
  SplitMix64 zero(0);
  EXPECT_EQ(zero.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(zero.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_NE(case_seed(1, 0, "thm1"), case_seed(1, 0, "thm2"));
  EXPECT_NE(case_seed(1, 0, "thm1"), case_seed(1, 1, "thm1"));
}

TEST(Generator, AssociativeProductsAreAssociative) {
  SplitMix64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto mu = random_associative_product(rng, 3, -2, 2);
    ASSERT_LE(mu.space()->dimension(), 3);
    ASSERT_EQ(mu.degree(), 0);
    ASSERT_TRUE(is_associative(mu));
    ASSERT_TRUE(satisfies_jacobi(antisymmetrize(mu)));
  }
}

TEST(Generator, RandomMapsAreHomogeneousAndOftenNonzero) {
  SplitMix64 rng(10);
  int nonzero = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto space = random_space(rng, 2, -2, 2);
    const auto f = random_map(rng, space, rng.uniform(1, 3));
    nonzero += !f.is_zero();
  }
  EXPECT_GT(nonzero, 50);
}
