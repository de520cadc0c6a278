#include "bracealg/brace.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "bracealg/errors.hpp"

namespace bracealg {

namespace {

void accumulate_into(MultiMap& out, const MultiMap& term, int sign) {
  if (!out.same_signature(term)) throw std::logic_error("summand has the wrong signature");
  for (const auto& [key, value] : term.entries()) out.add_entry(key, value.scaled(sign));
}

int result_arity(const MultiMap& f, std::span<const MultiMap> gs) {
  int r = f.arity() - static_cast<int>(gs.size());
  for (const auto& g : gs) r += g.arity();
  return r;
}

int result_degree(const MultiMap& f, std::span<const MultiMap> gs) {
  int p = f.degree();
  for (const auto& g : gs) p += g.degree();
  return p;
}

}  // namespace

Verdict compare_maps(const MultiMap& lhs, const MultiMap& rhs, const std::string& what) {
  if (!lhs.same_signature(rhs)) {
    return Verdict::fail(what + ": sides have different (arity, degree) signatures");
  }
  if (auto diff = first_difference(lhs, rhs)) return Verdict::fail(what, std::move(diff));
  return Verdict::pass();
}

BraceContext BraceContext::of(const MultiMap& f, std::span<const MultiMap> gs,
                              const InsertionPattern& slots) {
  BraceContext ctx;
  ctx.outer_arity = f.arity();
  for (const auto& g : gs) {
    ctx.arities.push_back(g.arity());
    ctx.degrees.push_back(g.degree());
  }
  ctx.slots = slots;
  return ctx;
}

int insertion_sign_parity(const BraceContext& ctx, InsertionSignConvention convention) {
  const int n = static_cast<int>(ctx.arities.size());
  if (static_cast<int>(ctx.degrees.size()) != n ||
      static_cast<int>(ctx.slots.slots.size()) != n + 1) {
    throw InputError("brace context: inconsistent lengths");
  }
  // 1-based views with a_0 := 0.
  auto a = [&](int i) -> long long { return i == 0 ? 0 : ctx.arities[i - 1]; };
  auto q = [&](int i) -> long long { return ctx.degrees[i - 1]; };
  auto k = [&](int j) -> long long { return ctx.slots.slots[j]; };
  const int first_j = convention == InsertionSignConvention::kFromSlotZero ? 0 : 1;
  long long beta = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = first_j; j < i; ++j) beta += (a(i) - 1) * (k(j) + a(j));
    beta += (ctx.outer_arity - i) * q(i);
    for (int j = 1; j < i; ++j) beta += q(i) * a(j);
  }
  return static_cast<int>(((beta % 2) + 2) % 2);
}

MultiMap brace(const MultiMap& f, std::span<const MultiMap> gs, const BraceOptions& options) {
  const int n = static_cast<int>(gs.size());
  if (n > f.arity()) {
    throw InputError("brace: " + std::to_string(n) + " inserted maps exceed outer arity " +
                     std::to_string(f.arity()));
  }
  MultiMap out(f.space(), result_arity(f, gs), result_degree(f, gs));
  for (const auto& slots : enumerate_insertion_patterns(f.arity() - n, n + 1)) {
    const int parity = insertion_sign_parity(BraceContext::of(f, gs, slots), options.convention);
    accumulate_into(out, compose_insertion(f, gs, slots), parity ? -1 : 1);
  }
  return out;
}

std::vector<int> brace_parities(std::span<const MultiMap> maps) {
  std::vector<int> out;
  out.reserve(maps.size());
  for (const auto& m : maps) out.push_back(m.brace_parity());
  return out;
}

Verdict check_brace_axiom(const MultiMap& x, const std::vector<MultiMap>& xs,
                          const std::vector<MultiMap>& ys, const BraceOptions& options) {
  const int n = static_cast<int>(xs.size());
  const int r = static_cast<int>(ys.size());
  if (n > x.arity()) throw InputError("brace axiom: more inner maps than x accepts");
  const MultiMap inner = brace(x, xs, options);
  if (r > inner.arity()) throw InputError("brace axiom: more ys than x{xs} accepts");
  const MultiMap lhs = brace(inner, ys, options);

  const auto x_par = brace_parities(xs);
  const auto y_par = brace_parities(ys);
  std::vector<int> y_par_prefix(static_cast<std::size_t>(r) + 1, 0);
  for (int m = 0; m < r; ++m) y_par_prefix[m + 1] = y_par_prefix[m] + y_par[m];

  std::map<std::tuple<int, int, int>, MultiMap> inner_cache;
  auto inner_brace = [&](int l, int i, int j) -> const MultiMap& {
    auto key = std::make_tuple(l, i, j);
    auto it = inner_cache.find(key);
    if (it == inner_cache.end()) {
      std::vector<MultiMap> args(ys.begin() + i, ys.begin() + j);
      it = inner_cache.emplace(key, brace(xs[l], args, options)).first;
    }
    return it->second;
  };

  MultiMap rhs(lhs.space(), lhs.arity(), lhs.degree());
  std::vector<std::pair<int, int>> cuts(static_cast<std::size_t>(n));
  auto emit = [&]() {
    std::vector<MultiMap> entries;
    int previous = 0;
    long long eps = 0;
    for (int l = 0; l < n; ++l) {
      const auto [i, j] = cuts[l];
      if (j - i > xs[l].arity()) return;
      for (int m = previous; m < i; ++m) entries.push_back(ys[m]);
      entries.push_back(inner_brace(l, i, j));
      eps += static_cast<long long>(x_par[l]) * y_par_prefix[i];
      previous = j;
    }
    for (int m = previous; m < r; ++m) entries.push_back(ys[m]);
    if (static_cast<int>(entries.size()) > x.arity()) return;
    accumulate_into(rhs, brace(x, entries, options), eps % 2 ? -1 : 1);
  };
  auto recurse = [&](auto&& self, int l, int lower) -> void {
    if (l == n) {
      emit();
      return;
    }
    for (int i = lower; i <= r; ++i) {
      for (int j = i; j <= r; ++j) {
        cuts[l] = {i, j};
        self(self, l + 1, j);
      }
    }
  };
  recurse(recurse, 0, 0);
  return compare_maps(lhs, rhs, "brace axiom");
}

SignedArrangements interleaved_brace_terms(const SignedArrangements& terms, int head, int tail,
                                           std::span<const int> parities,
                                           const EnumerationLimits& limits) {
  auto permuted = permute_head(terms, head, tail, parities, SignRule::kKoszul, limits);
  return interleave(permuted, head, tail, parities, SignRule::kKoszul);
}

MultiMap brace_over_arrangements(const MultiMap& f, const SignedArrangements& terms,
                                 std::span<const MultiMap> items, const BraceOptions& options) {
  MultiMap out(f.space(), result_arity(f, items), result_degree(f, items));
  for (const auto& [sign, seq] : materialize(terms, items)) {
    accumulate_into(out, brace(f, seq, options), sign);
  }
  return out;
}

}  // namespace bracealg
