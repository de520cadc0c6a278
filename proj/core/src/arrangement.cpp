#include "bracealg/arrangement.hpp"

#include <numeric>

#include "bracealg/errors.hpp"

namespace bracealg {

namespace {

void check_split(const SignedArrangements& terms, int head, int tail,
                 std::span<const int> degrees) {
  if (head < 0 || tail < 0) throw InputError("negative split");
  if (static_cast<int>(degrees.size()) != head + tail) {
    throw InputError("arrangement: expected " + std::to_string(head + tail) + " items");
  }
  for (const auto& term : terms) {
    if (static_cast<int>(term.order.size()) != head + tail) {
      throw InputError("arrangement term has the wrong length");
    }
  }
}

SignedArrangements permute_range(const SignedArrangements& terms, int offset, int length,
                                 std::span<const int> degrees, SignRule rule,
                                 const EnumerationLimits& limits) {
  const auto perms = enumerate_permutations(length, limits);
  SignedArrangements out;
  out.reserve(terms.size() * perms.size());
  for (const auto& term : terms) {
    std::vector<int> local_degrees;
    for (int i = 0; i < length; ++i) local_degrees.push_back(degrees[term.order[offset + i]]);
    for (const auto& pi : perms) {
      ArrangementTerm next = term;
      for (int i = 0; i < length; ++i) next.order[offset + i] = term.order[offset + pi[i]];
      next.sign *= signed_permutation_sign(rule, pi, local_degrees);
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

SignedArrangements identity_arrangement(int size) {
  ArrangementTerm term;
  term.order.resize(static_cast<std::size_t>(size));
  std::iota(term.order.begin(), term.order.end(), 0);
  return {term};
}

SignedArrangements permute_tail(const SignedArrangements& terms, int head, int tail,
                                std::span<const int> degrees, SignRule rule,
                                const EnumerationLimits& limits) {
  check_split(terms, head, tail, degrees);
  return permute_range(terms, head, tail, degrees, rule, limits);
}

SignedArrangements permute_head(const SignedArrangements& terms, int head, int tail,
                                std::span<const int> degrees, SignRule rule,
                                const EnumerationLimits& limits) {
  check_split(terms, head, tail, degrees);
  return permute_range(terms, 0, head, degrees, rule, limits);
}

SignedArrangements interleave(const SignedArrangements& terms, int head, int tail,
                              std::span<const int> degrees, SignRule rule) {
  check_split(terms, head, tail, degrees);
  const auto patterns = enumerate_insertion_patterns(tail, head + 1);
  SignedArrangements out;
  out.reserve(terms.size() * patterns.size());
  for (const auto& term : terms) {
    for (const auto& pattern : patterns) {
      ArrangementTerm next;
      next.order.reserve(term.order.size());
      long long eta = 0;
      long long z_degree_before = 0;
      int z = head;
      for (int i = 0; i <= head; ++i) {
        for (int t = 0; t < pattern.slots[i]; ++t) {
          z_degree_before += degrees[term.order[z]];
          next.order.push_back(term.order[z++]);
        }
        if (rule == SignRule::kAntisymmetricKoszul) {
          eta += static_cast<long long>(head - i) * pattern.slots[i];
        }
        if (i == head) break;
        eta += degrees[term.order[i]] * z_degree_before;
        next.order.push_back(term.order[i]);
      }
      next.sign = (eta % 2 == 0) ? term.sign : -term.sign;
      out.push_back(std::move(next));
    }
  }
  return out;
}

GradedVector eval_arrangements(const MultiMap& f, const SignedArrangements& terms,
                               const ArgSequence& args) {
  SparseVector total;
  for (const auto& [sign, seq] : materialize(terms, std::span<const GradedVector>(args))) {
    total.add_scaled(eval(f, seq).coefficients(), Scalar(sign));
  }
  return GradedVector(f.space(), std::move(total));
}

}  // namespace bracealg

namespace bracealg {

Verdict check_antisymmetrization_decomposition(const MultiMap& f, const EnumerationLimits& limits) {
  const MultiMap as_f = antisymmetrize(f, limits);
  const int k = f.arity();
  const int dim = f.space()->dimension();
  MultiMap::Key tuple(static_cast<std::size_t>(k), 0);
  for (;;) {
    ArgSequence args;
    for (int b : tuple) args.push_back(GradedVector::basis(f.space(), b));
    const auto degrees = f.space()->degrees_of(tuple);
    const SparseVector expected = as_f.value(tuple);
    for (int head = 0; head <= k; ++head) {
      const int tail = k - head;
      auto terms = permute_tail(identity_arrangement(k), head, tail, degrees,
                                SignRule::kAntisymmetricKoszul, limits);
      terms = permute_head(terms, head, tail, degrees, SignRule::kAntisymmetricKoszul, limits);
      terms = interleave(terms, head, tail, degrees, SignRule::kAntisymmetricKoszul);
      const SparseVector got = eval_arrangements(f, terms, args).coefficients();
      if (!(got == expected)) {
        return Verdict::fail("decomposition with split " + std::to_string(head) + " + " +
                                 std::to_string(tail),
                             MapDifference{tuple, got, expected});
      }
    }
    int pos = k - 1;
    while (pos >= 0 && tuple[pos] == dim - 1) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return Verdict::pass();
}

}  // namespace bracealg
