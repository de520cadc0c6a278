#include "bracealg/symbrace.hpp"

#include <stdexcept>

#include "bracealg/errors.hpp"

namespace bracealg {

namespace {

void accumulate_into(MultiMap& out, const MultiMap& term, int sign) {
  if (!out.same_signature(term)) throw std::logic_error("summand has the wrong signature");
  for (const auto& [key, value] : term.entries()) out.add_entry(key, value.scaled(sign));
}

void require_antisymmetric(const MultiMap& m, const char* role) {
  if (!is_antisymmetric(m)) {
    throw InputError(std::string("symmetric brace: ") + role + " is not antisymmetric");
  }
}

MultiMap evaluate(SymBraceFlavor flavor, const MultiMap& f, std::span<const MultiMap> gs,
                  const BraceOptions& options) {
  return flavor == SymBraceFlavor::kAntisymmetricMaps ? symmetric_brace(f, gs, options.limits)
                                                      : symmetrize_brace(f, gs, options);
}

}  // namespace

SymBraceContext SymBraceContext::of(const MultiMap& f, std::span<const MultiMap> gs) {
  SymBraceContext ctx;
  ctx.outer_arity = f.arity();
  for (const auto& g : gs) {
    ctx.arities.push_back(g.arity());
    ctx.degrees.push_back(g.degree());
  }
  return ctx;
}

int symmetric_brace_sign_parity(const SymBraceContext& ctx) {
  const int n = static_cast<int>(ctx.arities.size());
  if (static_cast<int>(ctx.degrees.size()) != n) throw InputError("sym brace context: lengths");
  auto a = [&](int i) -> long long { return ctx.arities[i - 1]; };
  auto q = [&](int i) -> long long { return ctx.degrees[i - 1]; };
  long long delta = 0;
  for (int i = 1; i <= n; ++i) {
    delta += (ctx.outer_arity - i) * q(i) + (n - i) * a(i);
    for (int j = 1; j < i; ++j) delta += q(i) * a(j) + a(i) * a(j);
  }
  return static_cast<int>(((delta % 2) + 2) % 2);
}

MultiMap symmetric_brace(const MultiMap& f, std::span<const MultiMap> gs,
                         const EnumerationLimits& limits) {
  const int n = static_cast<int>(gs.size());
  if (n > f.arity()) throw InputError("symmetric brace: more inserted maps than outer arity");
  require_antisymmetric(f, "outer map");
  for (const auto& g : gs) require_antisymmetric(g, "inserted map");

  InsertionPattern slots{std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  slots.slots.back() = f.arity() - n;
  const MultiMap block = compose_insertion(f, gs, slots);

  UnshuffleSpec spec;
  for (const auto& g : gs) spec.blocks.push_back(g.arity());
  spec.blocks.push_back(f.arity() - n);
  const auto unshuffles = enumerate_unshuffles(spec, limits);
  const int overall = symmetric_brace_sign_parity(SymBraceContext::of(f, gs)) ? -1 : 1;

  MultiMap out(f.space(), block.arity(), block.degree());
  MultiMap::Key target(static_cast<std::size_t>(block.arity()));
  for (const auto& [source, value] : block.entries()) {
    for (const auto& gamma : unshuffles) {
      // source = (x_gamma(1), ..., x_gamma(r)) fixes (x_1, ..., x_r).
      for (int i = 0; i < gamma.size(); ++i) target[gamma[i]] = source[i];
      const auto degrees = f.space()->degrees_of(target);
      out.add_entry(target, value.scaled(overall * antisym_koszul_sign(gamma, degrees)));
    }
  }
  return out;
}

MultiMap symmetrize_brace(const MultiMap& f, std::span<const MultiMap> gs,
                          const BraceOptions& options) {
  const int n = static_cast<int>(gs.size());
  if (n > f.arity()) throw InputError("symmetrize_brace: more inserted maps than outer arity");
  const auto parities = brace_parities(gs);
  std::vector<MultiMap> ordered(gs.begin(), gs.end());
  std::optional<MultiMap> out;
  for (const auto& sigma : enumerate_permutations(n, options.limits)) {
    const auto seq = sigma.apply(std::span<const MultiMap>(ordered));
    MultiMap term = brace(f, seq, options);
    if (!out) out.emplace(term.space(), term.arity(), term.degree());
    accumulate_into(*out, term, koszul_sign(sigma, parities));
  }
  return *out;
}

Verdict check_graded_symmetry(const MultiMap& f, const std::vector<MultiMap>& gs,
                              SymBraceFlavor flavor, const BraceOptions& options) {
  const MultiMap base = evaluate(flavor, f, gs, options);
  for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
    std::vector<MultiMap> swapped = gs;
    std::swap(swapped[i], swapped[i + 1]);
    const int sign = (gs[i].brace_parity() && gs[i + 1].brace_parity()) ? -1 : 1;
    auto verdict = compare_maps(evaluate(flavor, f, swapped, options), scale(sign, base),
                                "graded symmetry at position " + std::to_string(i + 1));
    if (!verdict) return verdict;
  }
  return Verdict::pass();
}

Verdict check_symmetric_brace_axiom(const MultiMap& f, const std::vector<MultiMap>& gs,
                                    const std::vector<MultiMap>& xs, SymBraceFlavor flavor,
                                    const BraceOptions& options) {
  const int n = static_cast<int>(gs.size());
  const int r = static_cast<int>(xs.size());
  if (n > f.arity()) throw InputError("symmetric brace axiom: more gs than f accepts");
  const MultiMap inner = evaluate(flavor, f, gs, options);
  if (r > inner.arity()) throw InputError("symmetric brace axiom: more xs than f<gs> accepts");
  const MultiMap lhs = evaluate(flavor, inner, xs, options);

  std::vector<int> parities;
  for (const auto& g : gs) parities.push_back(g.brace_parity());
  for (const auto& x : xs) parities.push_back(x.brace_parity());

  MultiMap rhs(lhs.space(), lhs.arity(), lhs.degree());
  for (const auto& blocks : enumerate_insertion_patterns(r, n + 1)) {
    bool admissible = blocks.slots[n] + n <= f.arity();
    for (int i = 0; i < n && admissible; ++i) admissible = blocks.slots[i] <= gs[i].arity();
    if (!admissible) continue;
    for (const auto& gamma : enumerate_unshuffles(UnshuffleSpec{blocks.slots}, options.limits)) {
      std::vector<int> order;
      std::vector<MultiMap> entries;
      int pos = 0;
      for (int i = 0; i < n; ++i) {
        order.push_back(i);
        std::vector<MultiMap> block_args;
        for (int t = 0; t < blocks.slots[i]; ++t, ++pos) {
          order.push_back(n + gamma[pos]);
          block_args.push_back(xs[gamma[pos]]);
        }
        entries.push_back(evaluate(flavor, gs[i], block_args, options));
      }
      for (; pos < r; ++pos) {
        order.push_back(n + gamma[pos]);
        entries.push_back(xs[gamma[pos]]);
      }
      const int eps = koszul_sign(Permutation::from_zero_based(order), parities);
      accumulate_into(rhs, evaluate(flavor, f, entries, options), eps);
    }
  }
  return compare_maps(lhs, rhs, "symmetric brace axiom");
}

Verdict check_antisymmetrization_compatibility(const MultiMap& f, const std::vector<MultiMap>& gs,
                                               const BraceOptions& options) {
  const int n = static_cast<int>(gs.size());
  if (n > f.arity()) throw InputError("antisymmetrization check: more gs than f accepts");
  const auto parities = brace_parities(gs);
  std::optional<MultiMap> lhs;
  for (const auto& sigma : enumerate_permutations(n, options.limits)) {
    const auto seq = sigma.apply(gs);
    MultiMap term = antisymmetrize(brace(f, seq, options), options.limits);
    if (!lhs) lhs.emplace(term.space(), term.arity(), term.degree());
    accumulate_into(*lhs, term, koszul_sign(sigma, parities));
  }
  std::vector<MultiMap> as_gs;
  for (const auto& g : gs) as_gs.push_back(antisymmetrize(g, options.limits));
  const MultiMap rhs = symmetric_brace(antisymmetrize(f, options.limits), as_gs, options.limits);
  return compare_maps(*lhs, rhs, "antisymmetrization compatibility");
}

Verdict check_interleaved_brace_expansion(const MultiMap& f, const std::vector<MultiMap>& xs,
                                          const BraceOptions& options) {
  const int total = static_cast<int>(xs.size());
  if (total > f.arity()) throw InputError("interleaved expansion: more items than f accepts");
  const auto parities = brace_parities(xs);
  const MultiMap direct = symmetrize_brace(f, xs, options);
  for (int head = 0; head <= total; ++head) {
    const int tail = total - head;
    auto terms = permute_tail(identity_arrangement(total), head, tail, parities,
                              SignRule::kKoszul, options.limits);
    terms = interleaved_brace_terms(terms, head, tail, parities, options.limits);
    auto verdict = compare_maps(brace_over_arrangements(f, terms, xs, options), direct,
                                "interleaved expansion with " + std::to_string(head) + " + " +
                                    std::to_string(tail));
    if (!verdict) return verdict;
  }
  return Verdict::pass();
}

}  // namespace bracealg
