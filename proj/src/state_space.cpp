#include "entroscope/state_space.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace entroscope {

namespace {

constexpr long kHardStateCap = 2'000'000;  // |states| hard cap
constexpr int kPermSoftCap = 8;            // permutations n <= 8
constexpr long kProductSoftCap = 1'000'000;
constexpr long kSliceSoftCap = 1'000'000;

// FNV-1a over an int vector, for class keying.
struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::int64_t factorial_i64(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t binomial_i64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

StateSpace build_space(SpaceKind kind, int n, int extent) {
  if (n < 1) throw std::invalid_argument("build_space: n must be positive");
  StateSpace s;
  s.kind = kind;
  s.n = n;
  switch (kind) {
    case SpaceKind::SingleParticle:
      s.particles = 1;
      s.size = n;
      break;
    case SpaceKind::Product: {
      if (extent < 1) throw std::invalid_argument("build_space: N must be positive");
      s.particles = extent;
      double sz = 1;
      for (int i = 0; i < extent; ++i) sz *= n;
      if (sz > kProductSoftCap)
        throw std::length_error("build_space: product space exceeds cap n^N <= 1e6");
      s.size = 1;
      for (int i = 0; i < extent; ++i) s.size *= n;
      break;
    }
    case SpaceKind::Permutations:
      if (n > kPermSoftCap)
        throw std::length_error("build_space: permutation space exceeds cap n <= 8");
      s.particles = n;
      s.size = factorial_i64(n);
      break;
    case SpaceKind::Slice: {
      if (extent < 1 || extent > n - 1)
        throw std::domain_error("build_space: slice requires 1 <= r <= n-1");
      s.particles = extent;
      std::int64_t sz = binomial_i64(n, extent);
      if (sz > kSliceSoftCap)
        throw std::length_error("build_space: slice space exceeds cap binom(n,r) <= 1e6");
      s.size = sz;
      break;
    }
  }
  if (s.size > kHardStateCap)
    throw std::length_error("build_space: state count exceeds hard cap 2e6");
  return s;
}

std::vector<int> StateSpace::unrank(long r) const {
  if (r < 0 || r >= size) throw std::out_of_range("unrank: rank out of range");
  switch (kind) {
    case SpaceKind::SingleParticle:
      return {static_cast<int>(r)};
    case SpaceKind::Product: {
      std::vector<int> xi(particles);
      for (int i = particles - 1; i >= 0; --i) {
        xi[i] = static_cast<int>(r % n);
        r /= n;
      }
      return xi;
    }
    case SpaceKind::Permutations: {
      // factorial number system: digits d_i in [0, n-1-i)
      std::vector<int> avail(n);
      for (int i = 0; i < n; ++i) avail[i] = i;
      std::vector<int> xi(n);
      std::int64_t f = factorial_i64(n - 1);
      for (int i = 0; i < n; ++i) {
        int d = static_cast<int>(r / f);
        r %= f;
        xi[i] = avail[d];
        avail.erase(avail.begin() + d);
        if (i + 1 < n) f /= (n - 1 - i);
      }
      return xi;
    }
    case SpaceKind::Slice: {
      // combinadic in lexicographic order of the sorted occupied set
      std::vector<int> occ(particles);
      int x = 0;
      for (int i = 0; i < particles; ++i) {
        for (;; ++x) {
          std::int64_t block = binomial_i64(n - 1 - x, particles - 1 - i);
          if (r < block) break;
          r -= block;
        }
        occ[i] = x++;
      }
      return occ;
    }
  }
  throw std::logic_error("unrank: bad kind");
}

long StateSpace::rank(std::span<const int> cfg) const {
  switch (kind) {
    case SpaceKind::SingleParticle:
      return cfg[0];
    case SpaceKind::Product: {
      long r = 0;
      for (int i = 0; i < particles; ++i) r = r * n + cfg[i];
      return r;
    }
    case SpaceKind::Permutations: {
      long r = 0;
      std::int64_t f = factorial_i64(n - 1);
      std::vector<bool> used(n, false);
      for (int i = 0; i < n; ++i) {
        int d = 0;
        for (int v = 0; v < cfg[i]; ++v)
          if (!used[v]) ++d;
        used[cfg[i]] = true;
        r += d * f;
        if (i + 1 < n) f /= (n - 1 - i);
      }
      return r;
    }
    case SpaceKind::Slice: {
      long r = 0;
      int x = 0;
      for (int i = 0; i < particles; ++i) {
        for (; x < cfg[i]; ++x) r += binomial_i64(n - 1 - x, particles - 1 - i);
        ++x;
      }
      return r;
    }
  }
  throw std::logic_error("rank: bad kind");
}

int StateSpace::label_at(std::span<const int> cfg, int x) const {
  switch (kind) {
    case SpaceKind::SingleParticle:
      return cfg[0] == x ? 0 : -1;
    case SpaceKind::Slice:
      return std::binary_search(cfg.begin(), cfg.end(), x) ? 0 : -1;
    case SpaceKind::Product:
    case SpaceKind::Permutations:
      for (int i = 0; i < particles; ++i)
        if (cfg[i] == x) return i;
      return -1;
  }
  return -1;
}

namespace {

// Key of a state under "condition on everything outside A": particle
// positions masked to -1 inside A (label identity retained), occupied/empty
// pattern outside A for slices.
std::vector<int> outside_key(const StateSpace& space, std::span<const int> cfg,
                             const std::vector<bool>& in_A) {
  std::vector<int> key;
  switch (space.kind) {
    case SpaceKind::SingleParticle:
    case SpaceKind::Product:
    case SpaceKind::Permutations:
      key.assign(cfg.begin(), cfg.end());
      for (int& p : key)
        if (in_A[p]) p = -1;
      break;
    case SpaceKind::Slice:
      key.reserve(cfg.size());
      for (int p : cfg) key.push_back(in_A[p] ? -1 : p);
      // positions inside A are interchangeable; only their count matters
      std::sort(key.begin(), key.end());
      break;
  }
  return key;
}

// Key under "condition on the observation at vertex x".
std::vector<int> coordinate_key(const StateSpace& space, std::span<const int> cfg, int x) {
  switch (space.kind) {
    case SpaceKind::SingleParticle:
    case SpaceKind::Slice:
      return {space.label_at(cfg, x) >= 0 ? 1 : 0};
    case SpaceKind::Permutations:
      return {space.label_at(cfg, x)};
    case SpaceKind::Product: {
      std::vector<int> labels;
      for (int i = 0; i < space.particles; ++i)
        if (cfg[i] == x) labels.push_back(i);
      return labels;
    }
  }
  throw std::logic_error("coordinate_key: bad kind");
}

BlockPartition partition_by_key(const StateSpace& space,
                                const std::function<std::vector<int>(std::span<const int>)>& key_fn) {
  BlockPartition part;
  part.class_of.resize(space.size);
  std::unordered_map<std::vector<int>, int, VecHash> index;
  std::vector<std::vector<int>> classes;
  for (long s = 0; s < space.size; ++s) {
    std::vector<int> cfg = space.unrank(s);
    std::vector<int> key = key_fn(cfg);
    auto [it, inserted] = index.try_emplace(std::move(key), static_cast<int>(classes.size()));
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(static_cast<int>(s));
    part.class_of[s] = it->second;
  }
  part.offsets.resize(classes.size() + 1);
  part.offsets[0] = 0;
  for (size_t c = 0; c < classes.size(); ++c)
    part.offsets[c + 1] = part.offsets[c] + static_cast<long>(classes[c].size());
  part.order.reserve(space.size);
  for (const auto& cls : classes) part.order.insert(part.order.end(), cls.begin(), cls.end());
  return part;
}

}  // namespace

BlockPartition block_partition(const StateSpace& space, std::span<const int> A) {
  if (A.size() < 2) throw std::domain_error("block_partition: |A| >= 2 required");
  std::vector<bool> in_A(space.n, false);
  for (int v : A) {
    if (v < 0 || v >= space.n) throw std::domain_error("block_partition: vertex out of range");
    in_A[v] = true;
  }
  BlockPartition part = partition_by_key(
      space, [&](std::span<const int> cfg) { return outside_key(space, cfg, in_A); });
  part.block.assign(A.begin(), A.end());
  std::sort(part.block.begin(), part.block.end());
  return part;
}

BlockPartition coordinate_partition(const StateSpace& space, int x) {
  if (x < 0 || x >= space.n) throw std::domain_error("coordinate_partition: vertex out of range");
  BlockPartition part = partition_by_key(
      space, [&](std::span<const int> cfg) { return coordinate_key(space, cfg, x); });
  part.block = {x};
  return part;
}

std::string space_name(const StateSpace& space) {
  switch (space.kind) {
    case SpaceKind::SingleParticle:
      return "single(" + std::to_string(space.n) + ")";
    case SpaceKind::Product:
      return "product(" + std::to_string(space.n) + "," + std::to_string(space.particles) + ")";
    case SpaceKind::Permutations:
      return "perm(" + std::to_string(space.n) + ")";
    case SpaceKind::Slice:
      return "slice(" + std::to_string(space.n) + "," + std::to_string(space.particles) + ")";
  }
  return "?";
}

}  // namespace entroscope
