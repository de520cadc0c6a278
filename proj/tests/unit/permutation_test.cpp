#include <bracealg/errors.hpp>
#include <bracealg/permutation.hpp>

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"

using namespace bracealg;

namespace {

std::vector<int> images_of(const Permutation& p) { return p.zero_based(); }

}  // namespace

TEST(KoszulSign, WorkedExamples) {
  const std::vector<int> mixed{3, -1, 0};
  EXPECT_EQ(koszul_sign(Permutation::identity(3), mixed), 1);
  const std::vector<int> odd_odd{1, 1};
  const std::vector<int> odd_even{1, 2};
  EXPECT_EQ(koszul_sign(Permutation::one_line({2, 1}), odd_odd), -1);
  EXPECT_EQ(koszul_sign(Permutation::one_line({2, 1}), odd_even), 1);
  const std::vector<int> three_odd{1, 1, 1};
  EXPECT_EQ(koszul_sign(Permutation::one_line({2, 3, 1}), three_odd), 1);
}

TEST(KoszulSign, AntisymmetricExamples) {
  const std::vector<int> d{0, 5};
  EXPECT_EQ(antisym_koszul_sign(Permutation::identity(2), d), 1);
  const std::vector<int> odd_odd{1, 1};
  const std::vector<int> even_even{0, 0};
  EXPECT_EQ(antisym_koszul_sign(Permutation::one_line({2, 1}), odd_odd), 1);
  EXPECT_EQ(antisym_koszul_sign(Permutation::one_line({2, 1}), even_even), -1);
}

TEST(KoszulSign, LengthMismatchIsInputError) {
  const std::vector<int> d{1};
  EXPECT_THROW(koszul_sign(Permutation::identity(2), d), InputError);
  EXPECT_THROW(antisym_koszul_sign(Permutation::identity(2), d), InputError);
}

TEST(KoszulSign, MatchesInversionFormulaAndChiIsSgnTimesEps) {
  // All degree vectors with entries in {-2..2}, n <= 5.
  for (int n = 0; n <= 5; ++n) {
    const auto perms = enumerate_permutations(n);
    for (const auto& deg : oracle::all_tuples(5, n)) {
      std::vector<int> d;
      for (int v : deg) d.push_back(v - 2);
      for (const auto& s : perms) {
        ASSERT_EQ(koszul_sign(s, d), oracle::koszul(images_of(s), d));
        ASSERT_EQ(antisym_koszul_sign(s, d), s.sign() * koszul_sign(s, d));
      }
    }
  }
}

TEST(KoszulSign, AllEvenAndAllOddDegrees) {
  for (int n = 1; n <= 5; ++n) {
    const std::vector<int> even(static_cast<std::size_t>(n), 2);
    const std::vector<int> odd(static_cast<std::size_t>(n), -1);
    for (const auto& s : enumerate_permutations(n)) {
      EXPECT_EQ(koszul_sign(s, even), 1);
      EXPECT_EQ(antisym_koszul_sign(s, even), s.sign());
      EXPECT_EQ(koszul_sign(s, odd), s.sign());
      EXPECT_EQ(antisym_koszul_sign(s, odd), 1);
    }
  }
}

TEST(KoszulSign, IsMultiplicative) {
  // eps(s * t; d) = eps(s; d) eps(t; s . d) for n <= 4, degrees in {-1, 0, 1}.
  for (int n = 1; n <= 4; ++n) {
    const auto perms = enumerate_permutations(n);
    for (const auto& deg : oracle::all_tuples(3, n)) {
      std::vector<int> d;
      for (int v : deg) d.push_back(v - 1);
      for (const auto& s : perms) {
        const auto moved = s.apply(d);
        for (const auto& t : perms) {
          ASSERT_EQ(koszul_sign(s * t, d), koszul_sign(s, d) * koszul_sign(t, moved));
          ASSERT_EQ(antisym_koszul_sign(s * t, d),
                    antisym_koszul_sign(s, d) * antisym_koszul_sign(t, moved));
        }
      }
    }
  }
}

TEST(Permutation, ActionComposesLeftToRight) {
  const auto s = Permutation::one_line({2, 3, 1});
  const auto t = Permutation::one_line({3, 1, 2});
  const std::vector<char> xs{'a', 'b', 'c'};
  EXPECT_EQ((s * t).apply(xs), t.apply(s.apply(xs)));
  EXPECT_EQ(s.apply(xs), (std::vector<char>{'b', 'c', 'a'}));
  EXPECT_TRUE((s * s.inverse()).is_identity());
  EXPECT_EQ(s.to_string(), "(2,3,1)");
  EXPECT_EQ(s.image(1), 2);
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation::one_line({1, 1}), InputError);
  EXPECT_THROW(Permutation::one_line({0, 1}), InputError);
  EXPECT_THROW(Permutation::one_line({1, 3}), InputError);
}

TEST(EnumeratePermutations, CountsAndOrder) {
  EXPECT_EQ(enumerate_permutations(0).size(), 1u);
  EXPECT_EQ(enumerate_permutations(0).front().size(), 0);
  EXPECT_EQ(enumerate_permutations(3).size(), 6u);
  const auto four = enumerate_permutations(4);
  ASSERT_EQ(four.size(), 24u);
  EXPECT_TRUE(four.front().is_identity());
  EXPECT_TRUE(std::is_sorted(four.begin(), four.end()));
  EXPECT_EQ(std::set<Permutation>(four.begin(), four.end()).size(), 24u);
}

TEST(EnumeratePermutations, CapIsConfigurable) {
  EXPECT_THROW(enumerate_permutations(9), ResourceError);
  EnumerationLimits small{3, 3};
  EXPECT_THROW(enumerate_permutations(4, small), ResourceError);
  EXPECT_EQ(enumerate_permutations(3, small).size(), 6u);
  EXPECT_THROW(enumerate_permutations(-1), InputError);
}

TEST(EnumerateUnshuffles, WorkedExamples) {
  EXPECT_EQ(enumerate_unshuffles({{1, 1}}).size(), 2u);
  EXPECT_EQ(enumerate_unshuffles({{2, 1}}).size(), 3u);
  const auto empty_first = enumerate_unshuffles({{0, 2}});
  ASSERT_EQ(empty_first.size(), 1u);
  EXPECT_TRUE(empty_first.front().is_identity());
  EXPECT_EQ(enumerate_unshuffles({{}}).size(), 1u);
  EXPECT_THROW(enumerate_unshuffles({{5, 4}}), ResourceError);
  EXPECT_THROW(enumerate_unshuffles({{-1, 2}}), InputError);
}

TEST(EnumerateUnshuffles, ExactlyTheBlockIncreasingPermutations) {
  // Brute-force filter of S_N against the direct enumeration, N <= 6.
  for (int total = 0; total <= 6; ++total) {
    for (int parts = 1; parts <= 4; ++parts) {
      for (const auto& blocks : oracle::compositions(total, parts)) {
        std::set<std::vector<int>> expected;
        for (const auto& p : oracle::all_perms(total)) {
          bool ok = true;
          int offset = 0;
          for (int b : blocks) {
            for (int i = 1; i < b; ++i) ok = ok && p[offset + i - 1] < p[offset + i];
            offset += b;
          }
          if (ok) expected.insert(p);
        }
        const auto got = enumerate_unshuffles({blocks});
        std::set<std::vector<int>> got_set;
        for (const auto& g : got) got_set.insert(g.zero_based());
        ASSERT_EQ(got.size(), got_set.size());
        ASSERT_EQ(got_set, expected);
        ASSERT_EQ(static_cast<long long>(got.size()), multinomial(blocks));
      }
    }
  }
}

TEST(UnshuffleFactorization, ReproducesSignedSymmetricGroup) {
  for (int total = 0; total <= 5; ++total) {
    for (int parts = 1; parts <= 3; ++parts) {
      for (const auto& blocks : oracle::compositions(total, parts)) {
        for (const auto& deg : oracle::all_tuples(2, total)) {
          EXPECT_TRUE(check_unshuffle_factorization({blocks}, deg, SignRule::kAntisymmetricKoszul));
          EXPECT_TRUE(check_unshuffle_factorization({blocks}, deg, SignRule::kKoszul));
        }
      }
    }
  }
}

TEST(InsertionPatterns, Compositions) {
  const auto p = enumerate_insertion_patterns(2, 2);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0].slots, (std::vector<int>{0, 2}));
  EXPECT_EQ(p[2].slots, (std::vector<int>{2, 0}));
  EXPECT_EQ(enumerate_insertion_patterns(0, 3).size(), 1u);
  EXPECT_EQ(enumerate_insertion_patterns(3, 3).size(), 10u);
}

TEST(BlockRelocation, SingleBlockIsIdentity) {
  const std::vector<int> blocks{4};
  for (const auto& pi : enumerate_permutations(4)) {
    const std::vector<int> d{1, 0, -1, 2};
    const auto result = relocate_blocks(pi, Permutation::identity(1), blocks, {{0, 0}}, d);
    EXPECT_EQ(result.permutation, pi);
    EXPECT_EQ(result.koszul_parity, 0);
    EXPECT_EQ(result.antisym_parity, 0);
  }
}

TEST(BlockRelocation, SwappedSingletons) {
  // Two even singleton blocks swapped by sigma: a plain transposition.
  const std::vector<int> blocks{1, 1};
  const std::vector<int> d{0, 0};
  const auto result = relocate_blocks(Permutation::identity(2), Permutation::one_line({2, 1}),
                                      blocks, {{0, 0, 0}}, d);
  EXPECT_EQ(result.permutation, Permutation::one_line({2, 1}));
  EXPECT_EQ(result.koszul_parity, 0);
  EXPECT_EQ(result.antisym_parity, 1);
  // Direct sign computation agrees.
  EXPECT_EQ(koszul_sign(result.permutation, d), 1);
  EXPECT_EQ(antisym_koszul_sign(result.permutation, d), -1);
}

TEST(BlockRelocation, ParitiesMatchDirectSigns) {
  oracle::Rng rng(43);
  for (int r = 0; r <= 5; ++r) {
    const auto pis = enumerate_permutations(r);
    for (int n = 0; n <= 3; ++n) {
      const auto sigmas = enumerate_permutations(n);
      for (int trial = 0; trial < 4; ++trial) {
        // Random shape: sizes a_1..a_n, k_0..k_n summing to r.
        const auto shapes = oracle::compositions(r, 2 * n + 1);
        const auto& shape = shapes[rng.uniform(0, static_cast<int>(shapes.size()) - 1)];
        std::vector<int> blocks, slots;
        for (int i = 0; i < 2 * n + 1; ++i) (i % 2 ? blocks : slots).push_back(shape[i]);
        std::vector<int> d;
        for (int i = 0; i < r; ++i) d.push_back(rng.uniform(-2, 2));
        for (const auto& pi : pis) {
          for (const auto& sigma : sigmas) {
            const auto result = relocate_blocks(pi, sigma, blocks, {slots}, d);
            const auto& rho = result.permutation.zero_based();
            ASSERT_EQ(oracle::koszul(rho, d) * oracle::koszul(pi.zero_based(), d),
                      result.koszul_parity ? -1 : 1);
            ASSERT_EQ(oracle::chi(rho, d) * oracle::chi(pi.zero_based(), d),
                      result.antisym_parity ? -1 : 1);
            ASSERT_TRUE(check_block_relocation(pi, sigma, blocks, {slots}, d));
          }
        }
      }
    }
  }
}

TEST(BlockRelocation, ShapeMismatchIsInputError) {
  const std::vector<int> blocks{1};
  const std::vector<int> d{0, 0};
  EXPECT_THROW(relocate_blocks(Permutation::identity(2), Permutation::identity(1), blocks,
                               {{0, 0}}, d),
               InputError);
}

TEST(ParityCongruences, Examples) {
  const std::vector<int> v1{7}, w1{-3};
  EXPECT_TRUE(parity_congruences_hold(Permutation::identity(1), v1, w1));
  const std::vector<int> v{1, 0}, w{1, 1};
  EXPECT_TRUE(parity_congruences_hold(Permutation::one_line({2, 1}), v, w));
  const std::vector<int> short_w{1};
  EXPECT_THROW(parity_congruences_hold(Permutation::one_line({2, 1}), v, short_w), InputError);
}

TEST(ParityCongruences, ExhaustiveOverS4) {
  oracle::Rng rng(44);
  for (int n = 0; n <= 4; ++n) {
    const auto sigmas = enumerate_permutations(n);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> v, w;
      for (int i = 0; i < n; ++i) {
        v.push_back(rng.uniform(-5, 5));
        w.push_back(rng.uniform(-5, 5));
      }
      for (const auto& s : sigmas) ASSERT_TRUE(parity_congruences_hold(s, v, w));
    }
  }
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(format_scalar(parse_scalar("6/4")), "3/2");
  EXPECT_EQ(format_scalar(parse_scalar("-2")), "-2");
  EXPECT_EQ(format_scalar(parse_scalar("-4/2")), "-2");
  EXPECT_EQ(format_scalar(parse_scalar("0/5")), "0");
  EXPECT_THROW(parse_scalar("1/0"), InputError);
  EXPECT_THROW(parse_scalar("abc"), InputError);
  EXPECT_THROW(parse_scalar("1.5"), InputError);
  EXPECT_THROW(parse_scalar(""), InputError);
  EXPECT_THROW(parse_scalar("--1"), InputError);
}
