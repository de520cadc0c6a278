#include "bracealg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bracealg/errors.hpp"

namespace bracealg {

namespace {

int parity(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
  }
}

}  // namespace

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::one_line(std::vector<int> images_one_based) {
  for (int& v : images_one_based) --v;
  return from_zero_based(std::move(images_one_based));
}

Permutation Permutation::from_zero_based(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[v]) {
      throw InputError("not a permutation");
    }
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ',';
    out << images_[i] + 1;
  }
  out << ')';
  return out.str();
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  require_same_length(lhs.images_.size(), rhs.images_.size(), "compose");
  std::vector<int> out(rhs.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.images_[rhs.images_[i]];
  return Permutation(std::move(out));
}

int UnshuffleSpec::total() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }
int InsertionPattern::total() const { return std::accumulate(slots.begin(), slots.end(), 0); }

int koszul_sign(const Permutation& sigma, std::span<const int> degrees) {
  require_same_length(static_cast<std::size_t>(sigma.size()), degrees.size(), "koszul_sign");
  // Start from (x_1..x_n) and bubble each element into its target slot;
  // every adjacent swap of x, y costs |x||y|.
  std::vector<int> current(sigma.zero_based());
  int total = 0;
  for (std::size_t pass = 0; pass < current.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < current.size() - pass; ++i) {
      if (current[i] > current[i + 1]) {
        total += parity(static_cast<long long>(degrees[current[i]]) * degrees[current[i + 1]]);
        std::swap(current[i], current[i + 1]);
      }
    }
  }
  return total % 2 == 0 ? 1 : -1;
}

int antisym_koszul_sign(const Permutation& sigma, std::span<const int> degrees) {
  return sigma.sign() * koszul_sign(sigma, degrees);
}

std::vector<Permutation> enumerate_permutations(int n, const EnumerationLimits& limits) {
  if (n < 0) throw InputError("negative permutation size");
  if (n > limits.max_permutation_size) {
    throw ResourceError("permutation size " + std::to_string(n) + " exceeds cap " +
                        std::to_string(limits.max_permutation_size));
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_zero_based(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> enumerate_unshuffles(const UnshuffleSpec& spec,
                                              const EnumerationLimits& limits) {
  for (int b : spec.blocks) {
    if (b < 0) throw InputError("negative unshuffle block");
  }
  const int total = spec.total();
  if (total > limits.max_unshuffle_size) {
    throw ResourceError("unshuffle size " + std::to_string(total) + " exceeds cap " +
                        std::to_string(limits.max_unshuffle_size));
  }
  // Label position i by its block; each distinct arrangement of labels picks
  // which values land in which block, and values within a block are taken
  // in increasing order.
  std::vector<int> labels;
  for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
    labels.insert(labels.end(), static_cast<std::size_t>(spec.blocks[b]), static_cast<int>(b));
  }
  std::vector<int> block_start(spec.blocks.size(), 0);
  for (std::size_t b = 1; b < spec.blocks.size(); ++b) {
    block_start[b] = block_start[b - 1] + spec.blocks[b - 1];
  }
  std::vector<Permutation> out;
  // labels[v] = block receiving value v.
  do {
    std::vector<int> images(static_cast<std::size_t>(total));
    std::vector<int> fill(block_start);
    for (int v = 0; v < total; ++v) images[fill[labels[v]]++] = v;
    out.push_back(Permutation::from_zero_based(std::move(images)));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<InsertionPattern> enumerate_insertion_patterns(int total, int parts) {
  if (total < 0 || parts < 1) throw InputError("invalid insertion pattern request");
  std::vector<InsertionPattern> out;
  std::vector<int> current(static_cast<std::size_t>(parts), 0);
  auto recurse = [&](auto&& self, int index, int remaining) -> void {
    if (index == parts - 1) {
      current[index] = remaining;
      out.push_back(InsertionPattern{current});
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      current[index] = v;
      self(self, index + 1, remaining - v);
    }
  };
  recurse(recurse, 0, total);
  return out;
}

long long multinomial(std::span<const int> blocks) {
  long long result = 1;
  int running = 0;
  for (int b : blocks) {
    // Multiply by C(running + b, b) incrementally; stays integral.
    for (int i = 1; i <= b; ++i) {
      ++running;
      result = result * running / i;
    }
  }
  return result;
}

BlockRelocation relocate_blocks(const Permutation& pi, const Permutation& sigma,
                                std::span<const int> blocks, const InsertionPattern& slots,
                                std::span<const int> degrees) {
  const int r = pi.size();
  const int n = sigma.size();
  require_same_length(blocks.size(), static_cast<std::size_t>(n), "relocate_blocks blocks");
  require_same_length(slots.slots.size(), static_cast<std::size_t>(n + 1),
                      "relocate_blocks slots");
  require_same_length(degrees.size(), static_cast<std::size_t>(r), "relocate_blocks degrees");
  const int block_total = std::accumulate(blocks.begin(), blocks.end(), 0);
  if (block_total + slots.total() != r) throw InputError("relocate_blocks: sizes do not sum to r");
  for (int b : blocks) {
    if (b < 0) throw InputError("relocate_blocks: negative block");
  }

  // block_offset[i] = a_1 + ... + a_{i}  (0-based: start of X_{i+1} in pi).
  std::vector<int> block_offset(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) block_offset[i + 1] = block_offset[i] + blocks[i];

  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(r));
  int free_consumed = 0;
  for (int m = 0; m <= n; ++m) {
    for (int t = 0; t < slots.slots[m]; ++t) images.push_back(pi[block_total + free_consumed++]);
    if (m == n) break;
    const int source = sigma[m];
    for (int t = 0; t < blocks[source]; ++t) images.push_back(pi[block_offset[source] + t]);
  }

  auto degree_at = [&](int pi_index) { return static_cast<long long>(degrees[pi[pi_index]]); };
  std::vector<long long> block_degree(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int t = block_offset[i]; t < block_offset[i + 1]; ++t) block_degree[i] += degree_at(t);
  }

  long long koszul = 0;
  long long transpositions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (sigma[i] > sigma[j]) {
        koszul += block_degree[sigma[i]] * block_degree[sigma[j]];
        transpositions += static_cast<long long>(blocks[sigma[i]]) * blocks[sigma[j]];
      }
    }
  }
  // Strings X_sigma(i) pass over the free x's in slots k_0..k_{i-1}.
  long long free_degree_before = 0;
  int free_count_before = 0;
  int free_index = block_total;
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < slots.slots[i]; ++t) free_degree_before += degree_at(free_index++);
    free_count_before += slots.slots[i];
    koszul += block_degree[sigma[i]] * free_degree_before;
    transpositions += static_cast<long long>(blocks[sigma[i]]) * free_count_before;
  }

  BlockRelocation out;
  out.permutation = Permutation::from_zero_based(std::move(images));
  out.koszul_parity = parity(koszul);
  out.antisym_parity = parity(koszul + transpositions);
  return out;
}

bool parity_congruences_hold(const Permutation& sigma, std::span<const int> v,
                             std::span<const int> w) {
  const auto n = static_cast<std::size_t>(sigma.size());
  require_same_length(v.size(), n, "parity_congruences_hold v");
  require_same_length(w.size(), n, "parity_congruences_hold w");
  auto vs = [&](std::size_t i) { return static_cast<long long>(v[sigma[i]]); };
  auto ws = [&](std::size_t i) { return static_cast<long long>(w[sigma[i]]); };

  long long first = 0;
  long long second_lhs = 0;
  long long second_rhs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      first += static_cast<long long>(v[i]) * w[j];
      first += vs(i) * ws(j);
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sigma[i] > sigma[j]) {
        first += ws(i) * vs(j) + vs(i) * ws(j);
        second_lhs += vs(i) + vs(j);
      }
    }
    second_rhs += static_cast<long long>(i) * (v[i] + vs(i));
  }
  return parity(first) == 0 && parity(second_lhs) == parity(second_rhs);
}

}  // namespace bracealg

namespace bracealg {

bool check_unshuffle_factorization(const UnshuffleSpec& spec, std::span<const int> degrees,
                                   SignRule rule, const EnumerationLimits& limits) {
  const int total = spec.total();
  require_same_length(degrees.size(), static_cast<std::size_t>(total), "unshuffle factorization");
  std::vector<std::vector<Permutation>> block_perms;
  for (int b : spec.blocks) block_perms.push_back(enumerate_permutations(b, limits));

  std::vector<std::pair<Permutation, int>> produced;
  for (const auto& gamma : enumerate_unshuffles(spec, limits)) {
    const int gamma_sign = signed_permutation_sign(rule, gamma, degrees);
    const std::vector<int> moved = gamma.apply(degrees);
    std::vector<int> images(static_cast<std::size_t>(total));
    auto recurse = [&](auto&& self, std::size_t block, int offset, int sign) -> void {
      if (block == spec.blocks.size()) {
        // position i holds x_gamma(rho(i)); compose gamma with the block sum.
        std::vector<int> composed(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) composed[i] = gamma[images[i]];
        produced.emplace_back(Permutation::from_zero_based(std::move(composed)), sign);
        return;
      }
      const int size = spec.blocks[block];
      std::span<const int> local(moved.data() + offset, static_cast<std::size_t>(size));
      for (const auto& pi : block_perms[block]) {
        for (int i = 0; i < size; ++i) images[offset + i] = offset + pi[i];
        self(self, block + 1, offset + size, sign * signed_permutation_sign(rule, pi, local));
      }
    };
    recurse(recurse, 0, 0, gamma_sign);
  }

  std::vector<std::pair<Permutation, int>> expected;
  for (const auto& rho : enumerate_permutations(total, limits)) {
    expected.emplace_back(rho, signed_permutation_sign(rule, rho, degrees));
  }
  std::sort(produced.begin(), produced.end());
  return produced == expected;
}

bool check_block_relocation(const Permutation& pi, const Permutation& sigma,
                            std::span<const int> blocks, const InsertionPattern& slots,
                            std::span<const int> degrees) {
  const BlockRelocation result = relocate_blocks(pi, sigma, blocks, slots, degrees);

  // x_pi(1..r) split into the strings X_1..X_n followed by the free x's.
  const std::vector<int> arranged = pi.zero_based();
  std::vector<std::vector<int>> strings;
  std::size_t cursor = 0;
  for (int b : blocks) {
    strings.emplace_back(arranged.begin() + static_cast<std::ptrdiff_t>(cursor),
                         arranged.begin() + static_cast<std::ptrdiff_t>(cursor + b));
    cursor += static_cast<std::size_t>(b);
  }
  std::vector<int> expected;
  for (std::size_t m = 0; m < slots.slots.size(); ++m) {
    for (int t = 0; t < slots.slots[m]; ++t) expected.push_back(arranged[cursor++]);
    if (m < blocks.size()) {
      const auto& s = strings[static_cast<std::size_t>(sigma[m])];
      expected.insert(expected.end(), s.begin(), s.end());
    }
  }
  if (result.permutation.zero_based() != expected) return false;

  const int eps_ratio = koszul_sign(result.permutation, degrees) * koszul_sign(pi, degrees);
  const int chi_ratio =
      antisym_koszul_sign(result.permutation, degrees) * antisym_koszul_sign(pi, degrees);
  return eps_ratio == (result.koszul_parity ? -1 : 1) &&
         chi_ratio == (result.antisym_parity ? -1 : 1);
}

}  // namespace bracealg
