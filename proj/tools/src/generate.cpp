#include "bracealg_cli/generate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <bracealg/errors.hpp>

namespace bracealg::cli {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int SplitMix64::uniform(int lo, int hi) {
  if (hi < lo) throw InputError("empty random range");
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
  return lo + static_cast<int>(next() % span);
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t case_index, std::string_view check) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : check) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  SplitMix64 mix(seed ^ h);
  mix = SplitMix64(mix.next() + case_index);
  return mix.next();
}

SpacePtr random_space(SplitMix64& rng, int dim, int lo, int hi) {
  std::vector<BasisElement> basis;
  for (int i = 0; i < dim; ++i) basis.push_back({"e" + std::to_string(i), rng.uniform(lo, hi)});
  return make_space(std::move(basis));
}

namespace {

// Calls fn(tuple, input degree) for every basis tuple of the given arity.
template <typename Fn>
void for_each_tuple(const GradedSpace& space, int arity, Fn&& fn) {
  std::vector<int> t(static_cast<std::size_t>(arity), 0);
  for (;;) {
    int in = 0;
    for (int b : t) in += space.degree(b);
    fn(t, in);
    int pos = arity - 1;
    while (pos >= 0 && t[pos] == space.dimension() - 1) t[pos--] = 0;
    if (pos < 0) return;
    ++t[pos];
  }
}

constexpr int kCoefficients[] = {-2, -1, 1, 2};

}  // namespace

MultiMap random_map(SplitMix64& rng, const SpacePtr& space, int arity) {
  std::vector<int> achievable;
  for_each_tuple(*space, arity, [&](const std::vector<int>&, int in) {
    for (const auto& e : space->basis()) achievable.push_back(e.degree - in);
  });
  std::sort(achievable.begin(), achievable.end());
  achievable.erase(std::unique(achievable.begin(), achievable.end()), achievable.end());
  const int p = achievable[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(achievable.size()) - 1))];
  MultiMap f(space, arity, p);
  for_each_tuple(*space, arity, [&](const std::vector<int>& t, int in) {
    for (int j = 0; j < space->dimension(); ++j) {
      if (space->degree(j) != p + in) continue;
      if (rng.coin()) f.add_entry(t, j, kCoefficients[rng.uniform(0, 3)]);
    }
  });
  return f;
}

void perturb(SplitMix64& rng, MultiMap& mu) {
  std::vector<std::pair<std::vector<int>, int>> candidates;
  const auto& space = *mu.space();
  for_each_tuple(space, mu.arity(), [&](const std::vector<int>& t, int in) {
    for (int j = 0; j < space.dimension(); ++j)
      if (space.degree(j) == mu.degree() + in) candidates.emplace_back(t, j);
  });
  if (candidates.empty()) return;
  const auto& [t, j] = candidates[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(candidates.size()) - 1))];
  mu.add_entry(t, j, kCoefficients[rng.uniform(0, 3)]);
}

namespace {

struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;  // empty for a vertex idempotent
  int degree = 0;
};

}  // namespace

MultiMap random_associative_product(SplitMix64& rng, int max_dim, int lo, int hi) {
  for (;;) {
    const int vertices = rng.uniform(1, 2);
    const int arrow_count = rng.uniform(0, 3);
    std::vector<Path> arrows;
    for (int i = 0; i < arrow_count; ++i) {
      arrows.push_back({rng.uniform(0, vertices - 1), rng.uniform(0, vertices - 1), {i}, rng.uniform(lo, hi)});
    }
    const int max_length = rng.uniform(1, 2);

    std::vector<Path> basis;
    for (int v = 0; v < vertices; ++v)
      if (rng.coin()) basis.push_back({v, v, {}, 0});
    std::vector<Path> layer = arrows;
    for (int length = 1; length <= max_length && !layer.empty(); ++length) {
      basis.insert(basis.end(), layer.begin(), layer.end());
      std::vector<Path> longer;
      for (const auto& p : layer) {
        for (const auto& a : arrows) {
          if (p.target != a.source) continue;
          Path q = p;
          q.target = a.target;
          q.arrows.push_back(a.arrows.front());
          q.degree += a.degree;
          longer.push_back(q);
        }
      }
      layer = std::move(longer);
    }
    if (basis.empty() || static_cast<int>(basis.size()) > max_dim) continue;

    std::vector<BasisElement> elements;
    std::map<std::vector<int>, int> index_of_path;  // non-idempotent paths
    for (std::size_t i = 0; i < basis.size(); ++i) {
      elements.push_back({"e" + std::to_string(i), basis[i].degree});
      if (!basis[i].arrows.empty()) index_of_path[basis[i].arrows] = static_cast<int>(i);
    }
    const auto space = make_space(std::move(elements));
    std::vector<Scalar> scale;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const int num = kCoefficients[rng.uniform(0, 3)];
      const int den = rng.uniform(1, 2);
      scale.emplace_back(num, den);
      scale.back().canonicalize();
    }

    MultiMap mu(space, 2, 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const Path& p = basis[i];
        const Path& q = basis[j];
        if (p.target != q.source) continue;
        int k = -1;
        if (p.arrows.empty()) {
          k = static_cast<int>(j);
        } else if (q.arrows.empty()) {
          k = static_cast<int>(i);
        } else {
          auto joined = p.arrows;
          joined.insert(joined.end(), q.arrows.begin(), q.arrows.end());
          auto it = index_of_path.find(joined);
          if (it == index_of_path.end()) continue;  // longer than the cut-off
          k = it->second;
        }
        // (s_i b_i)(s_j b_j) = s_i s_j / s_k (s_k b_k).
        mu.add_entry({static_cast<int>(i), static_cast<int>(j)}, k, scale[i] * scale[j] / scale[static_cast<std::size_t>(k)]);
      }
    }
    return mu;
  }
}

Permutation random_permutation(SplitMix64& rng, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(images[i], images[rng.uniform(0, i)]);
  return Permutation::from_zero_based(std::move(images));
}

std::vector<int> random_composition(SplitMix64& rng, int total, int parts) {
  std::vector<int> out(static_cast<std::size_t>(parts), 0);
  for (int i = 0; i < total; ++i) ++out[rng.uniform(0, parts - 1)];
  return out;
}

namespace {

SparseVector product(const MultiMap& mu, const SparseVector& a, const SparseVector& b) {
  SparseVector out;
  for (const auto& [i, x] : a.terms())
    for (const auto& [j, y] : b.terms()) out.add_scaled(mu.value({i, j}), x * y);
  return out;
}

bool odd_product(int a, int b) { return (static_cast<long long>(a) * b) % 2 != 0; }

}  // namespace

bool is_associative(const MultiMap& mu) {
  const auto& space = *mu.space();
  bool ok = true;
  for_each_tuple(space, 3, [&](const std::vector<int>& t, int) {
    if (!ok) return;
    const auto a = SparseVector::basis(t[0]);
    const auto b = SparseVector::basis(t[1]);
    const auto c = SparseVector::basis(t[2]);
    auto right = product(mu, a, product(mu, b, c));
    if (odd_product(mu.degree(), space.degree(t[0]))) right = right.scaled(-1);
    ok = product(mu, product(mu, a, b), c) == right;
  });
  return ok;
}

bool satisfies_jacobi(const MultiMap& bracket) {
  const auto& space = *bracket.space();
  bool ok = true;
  for_each_tuple(space, 3, [&](const std::vector<int>& t, int) {
    if (!ok) return;
    SparseVector sum;
    for (int rot = 0; rot < 3; ++rot) {
      const int a = t[rot], b = t[(rot + 1) % 3], c = t[(rot + 2) % 3];
      const int sign = odd_product(space.degree(a), space.degree(c)) ? -1 : 1;
      sum.add_scaled(product(bracket, SparseVector::basis(a), bracket.value({b, c})), sign);
    }
    ok = sum.is_zero();
  });
  return ok;
}

}  // namespace bracealg::cli
