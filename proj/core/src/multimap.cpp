#include "bracealg/multimap.hpp"

#include <numeric>
#include <string>

#include "bracealg/errors.hpp"

namespace bracealg {

namespace {

bool odd(long long x) { return x % 2 != 0; }

std::string key_to_string(const MultiMap::Key& key) {
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(key[i]);
  }
  return out + ")";
}

// Multilinear evaluation of f on sparse factors.
SparseVector eval_factors(const MultiMap& f, const std::vector<SparseVector>& factors) {
  SparseVector out;
  MultiMap::Key key(factors.size());
  auto recurse = [&](auto&& self, std::size_t pos, const Scalar& coeff) -> void {
    if (pos == factors.size()) {
      auto it = f.entries().find(key);
      if (it != f.entries().end()) out.add_scaled(it->second, coeff);
      return;
    }
    for (const auto& [index, c] : factors[pos].terms()) {
      key[pos] = index;
      self(self, pos + 1, coeff * c);
    }
  };
  recurse(recurse, 0, Scalar(1));
  return out;
}

void require_same_space(const MultiMap& f, const MultiMap& g) {
  if (f.space() != g.space() && !(*f.space() == *g.space())) {
    throw InputError("maps live on different spaces");
  }
}

// out basis index -> every (input tuple, coefficient) producing it.
using ReverseIndex = std::map<int, std::vector<std::pair<MultiMap::Key, Scalar>>>;

ReverseIndex reverse_index(const MultiMap& g) {
  ReverseIndex index;
  for (const auto& [in, out] : g.entries()) {
    for (const auto& [basis, coeff] : out.terms()) index[basis].emplace_back(in, coeff);
  }
  return index;
}

}  // namespace

MultiMap::MultiMap(SpacePtr space, int arity, int degree)
    : space_(std::move(space)), arity_(arity), degree_(degree) {
  if (!space_) throw InputError("multilinear map without a space");
  if (arity_ < 1) throw InputError("multilinear maps need arity >= 1");
}

void MultiMap::add_entry(const Key& in, int out, const Scalar& coeff) {
  add_entry(in, SparseVector::basis(out, coeff));
}

void MultiMap::add_entry(const Key& in, const SparseVector& out) {
  if (static_cast<int>(in.size()) != arity_) {
    throw InputError("entry " + key_to_string(in) + " has wrong arity for map of arity " +
                     std::to_string(arity_));
  }
  long long in_degree = 0;
  for (int i : in) {
    if (i < 0 || i >= space_->dimension()) throw InputError("basis index out of range");
    in_degree += space_->degree(i);
  }
  for (const auto& [index, coeff] : out.terms()) {
    if (index < 0 || index >= space_->dimension()) throw InputError("basis index out of range");
    if (space_->degree(index) != degree_ + in_degree) {
      throw InputError("entry " + key_to_string(in) + " -> " + space_->name(index) +
                       " violates homogeneity: output degree " +
                       std::to_string(space_->degree(index)) + " != " +
                       std::to_string(degree_ + in_degree));
    }
  }
  if (out.is_zero()) return;
  auto& slot = entries_[in];
  slot.add_scaled(out, Scalar(1));
  if (slot.is_zero()) entries_.erase(in);
}

SparseVector MultiMap::value(const Key& in) const {
  auto it = entries_.find(in);
  return it == entries_.end() ? SparseVector{} : it->second;
}

bool MultiMap::same_signature(const MultiMap& other) const {
  return arity_ == other.arity_ && degree_ == other.degree_ &&
         (space_ == other.space_ || *space_ == *other.space_);
}

GradedVector eval(const MultiMap& f, const ArgSequence& args) {
  if (static_cast<int>(args.size()) != f.arity()) {
    throw InputError("eval: expected " + std::to_string(f.arity()) + " arguments, got " +
                     std::to_string(args.size()));
  }
  std::vector<SparseVector> factors;
  factors.reserve(args.size());
  for (const auto& a : args) {
    if (!(*a.space() == *f.space())) throw InputError("eval: argument from a different space");
    factors.push_back(a.coefficients());
  }
  return GradedVector(f.space(), eval_factors(f, factors));
}

MultiMap add(const MultiMap& f, const MultiMap& g) {
  if (!f.same_signature(g)) throw InputError("add: signature mismatch");
  MultiMap out = f;
  for (const auto& [in, value] : g.entries()) out.add_entry(in, value);
  return out;
}

MultiMap scale(const Scalar& c, const MultiMap& f) {
  MultiMap out(f.space(), f.arity(), f.degree());
  if (c == 0) return out;
  for (const auto& [in, value] : f.entries()) out.add_entry(in, value.scaled(c));
  return out;
}

bool equals(const MultiMap& f, const MultiMap& g) {
  return f.same_signature(g) && f.entries() == g.entries();
}

std::optional<MapDifference> first_difference(const MultiMap& f, const MultiMap& g) {
  auto a = f.entries().begin();
  auto b = g.entries().begin();
  while (a != f.entries().end() || b != g.entries().end()) {
    if (b == g.entries().end() || (a != f.entries().end() && a->first < b->first)) {
      return MapDifference{a->first, a->second, {}};
    }
    if (a == f.entries().end() || b->first < a->first) {
      return MapDifference{b->first, {}, b->second};
    }
    if (!(a->second == b->second)) return MapDifference{a->first, a->second, b->second};
    ++a;
    ++b;
  }
  return std::nullopt;
}

std::vector<int> argument_degrees(const ArgSequence& args) {
  std::vector<int> out;
  out.reserve(args.size());
  for (const auto& a : args) {
    auto d = a.homogeneous_degree();
    if (!d) throw InputError("argument is zero or not homogeneous");
    out.push_back(*d);
  }
  return out;
}

namespace {

void check_insertion_shape(const MultiMap& f, std::span<const MultiMap> gs,
                           const InsertionPattern& slots) {
  if (slots.slots.size() != gs.size() + 1) {
    throw InputError("insertion pattern needs n + 1 slots");
  }
  for (int k : slots.slots) {
    if (k < 0) throw InputError("negative insertion slot");
  }
  if (f.arity() != static_cast<int>(gs.size()) + slots.total()) {
    throw InputError("insertion pattern does not fill the outer map's arity");
  }
  for (const auto& g : gs) require_same_space(f, g);
}

}  // namespace

GradedVector tensor_block_eval(const MultiMap& f, std::span<const MultiMap> gs,
                               const InsertionPattern& slots, const ArgSequence& args) {
  check_insertion_shape(f, gs, slots);
  int expected = slots.total();
  for (const auto& g : gs) expected += g.arity();
  if (static_cast<int>(args.size()) != expected) {
    throw InputError("tensor_block_eval: expected " + std::to_string(expected) +
                     " arguments, got " + std::to_string(args.size()));
  }
  const GradedSpace& space = *f.space();
  SparseVector total;

  // Expand the arguments into basis tuples and walk each one through the
  // tensor product of maps.
  MultiMap::Key tuple(args.size());
  auto walk = [&](const Scalar& coeff) {
    std::vector<SparseVector> factors;
    factors.reserve(static_cast<std::size_t>(f.arity()));
    std::size_t pos = 0;
    long long consumed_degree = 0;
    bool negative = false;
    for (std::size_t j = 0; j < slots.slots.size(); ++j) {
      for (int t = 0; t < slots.slots[j]; ++t) {
        factors.push_back(SparseVector::basis(tuple[pos]));
        consumed_degree += space.degree(tuple[pos]);
        ++pos;
      }
      if (j == gs.size()) break;
      const MultiMap& g = gs[j];
      if (odd(static_cast<long long>(g.degree()) * consumed_degree)) negative = !negative;
      MultiMap::Key block(tuple.begin() + static_cast<std::ptrdiff_t>(pos),
                          tuple.begin() + static_cast<std::ptrdiff_t>(pos) + g.arity());
      for (int b : block) consumed_degree += space.degree(b);
      pos += static_cast<std::size_t>(g.arity());
      factors.push_back(g.value(block));
    }
    total.add_scaled(eval_factors(f, factors), negative ? Scalar(-coeff) : coeff);
  };
  auto expand = [&](auto&& self, std::size_t pos, const Scalar& coeff) -> void {
    if (pos == args.size()) {
      walk(coeff);
      return;
    }
    for (const auto& [index, c] : args[pos].coefficients().terms()) {
      tuple[pos] = index;
      self(self, pos + 1, coeff * c);
    }
  };
  expand(expand, 0, Scalar(1));
  return GradedVector(f.space(), std::move(total));
}

MultiMap compose_insertion(const MultiMap& f, std::span<const MultiMap> gs,
                           const InsertionPattern& slots) {
  check_insertion_shape(f, gs, slots);
  const GradedSpace& space = *f.space();
  int arity = slots.total();
  int degree = f.degree();
  std::vector<ReverseIndex> reverse;
  reverse.reserve(gs.size());
  for (const auto& g : gs) {
    arity += g.arity();
    degree += g.degree();
    reverse.push_back(reverse_index(g));
  }
  MultiMap out(f.space(), arity, degree);

  // Outer-key positions that receive a g output.
  std::vector<std::size_t> g_position;
  {
    std::size_t pos = 0;
    for (std::size_t j = 0; j < gs.size(); ++j) {
      pos += static_cast<std::size_t>(slots.slots[j]);
      g_position.push_back(pos++);
    }
  }

  std::vector<const std::pair<MultiMap::Key, Scalar>*> choice(gs.size());
  for (const auto& [outer_key, outer_value] : f.entries()) {
    bool reachable = true;
    for (std::size_t j = 0; j < gs.size() && reachable; ++j) {
      reachable = reverse[j].count(outer_key[g_position[j]]) > 0;
    }
    if (!reachable) continue;

    auto emit = [&]() {
      MultiMap::Key key;
      key.reserve(static_cast<std::size_t>(arity));
      Scalar coeff = 1;
      long long consumed_degree = 0;
      bool negative = false;
      std::size_t outer = 0;
      for (std::size_t j = 0; j <= gs.size(); ++j) {
        for (int t = 0; t < slots.slots[j]; ++t) {
          key.push_back(outer_key[outer]);
          consumed_degree += space.degree(outer_key[outer]);
          ++outer;
        }
        if (j == gs.size()) break;
        if (odd(static_cast<long long>(gs[j].degree()) * consumed_degree)) negative = !negative;
        for (int b : choice[j]->first) {
          key.push_back(b);
          consumed_degree += space.degree(b);
        }
        coeff *= choice[j]->second;
        ++outer;
      }
      if (negative) coeff = -coeff;
      out.add_entry(key, outer_value.scaled(coeff));
    };
    auto recurse = [&](auto&& self, std::size_t j) -> void {
      if (j == gs.size()) {
        emit();
        return;
      }
      for (const auto& candidate : reverse[j].at(outer_key[g_position[j]])) {
        choice[j] = &candidate;
        self(self, j + 1);
      }
    };
    recurse(recurse, 0);
  }
  return out;
}

MultiMap antisymmetrize(const MultiMap& f, const EnumerationLimits& limits) {
  const auto perms = enumerate_permutations(f.arity(), limits);
  MultiMap out(f.space(), f.arity(), f.degree());
  MultiMap::Key target(static_cast<std::size_t>(f.arity()));
  for (const auto& [source, value] : f.entries()) {
    for (const auto& sigma : perms) {
      // source = (t_sigma(1), ..., t_sigma(k)) fixes t.
      for (int i = 0; i < sigma.size(); ++i) target[sigma[i]] = source[i];
      const auto degrees = f.space()->degrees_of(target);
      out.add_entry(target, value.scaled(antisym_koszul_sign(sigma, degrees)));
    }
  }
  return out;
}

bool is_antisymmetric(const MultiMap& f) {
  const GradedSpace& space = *f.space();
  for (const auto& [key, value] : f.entries()) {
    for (int i = 0; i + 1 < f.arity(); ++i) {
      MultiMap::Key swapped = key;
      std::swap(swapped[i], swapped[i + 1]);
      const bool odd_pair = odd(static_cast<long long>(space.degree(key[i])) *
                                space.degree(key[i + 1]));
      // chi of an adjacent transposition: sgn = -1 times the Koszul factor.
      const Scalar chi = odd_pair ? 1 : -1;
      if (!(f.value(swapped) == value.scaled(chi))) return false;
    }
  }
  return true;
}

}  // namespace bracealg
