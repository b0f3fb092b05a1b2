#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace entroscope {

enum class SpaceKind { SingleParticle, Product, Permutations, Slice };

/// Finite configuration space with a deterministic rank/unrank codec and
/// uniform measure. Configurations are reported as integer vectors:
///   SingleParticle(n)  -> {x}, the particle position
///   Product(n, N)      -> (xi_1, ..., xi_N), position of each labeled particle
///   Permutations(n)    -> (xi_1, ..., xi_n), injective positions (xi = sigma^{-1})
///   Slice(n, r)        -> sorted list of the r occupied vertices
struct StateSpace {
  SpaceKind kind;
  int n = 0;          // number of vertices
  int particles = 0;  // N (product), n (permutations), r (slice), 1 (single)
  long size = 0;

  std::vector<int> unrank(long rank) const;
  long rank(std::span<const int> config) const;

  // Label at vertex x, or -1 when x is unoccupied. For Product spaces with
  // multiple particles at x, returns the lowest label present.
  int label_at(std::span<const int> config, int x) const;

  double measure() const { return 1.0 / static_cast<double>(size); }
};

StateSpace build_space(SpaceKind kind, int n, int extent = 1);

inline StateSpace single_particle_space(int n) { return build_space(SpaceKind::SingleParticle, n); }
inline StateSpace product_space(int n, int N) { return build_space(SpaceKind::Product, n, N); }
inline StateSpace permutation_space(int n) { return build_space(SpaceKind::Permutations, n); }
inline StateSpace slice_space(int n, int r) { return build_space(SpaceKind::Slice, n, r); }

/// Partition of state indices into the equivalence classes of "equal outside
/// A": two states are equivalent when they agree on everything the block
/// resampling at A cannot touch. Conditional measure within a class is
/// uniform. Classes are stored flattened, ordered by first-seen state rank.
struct BlockPartition {
  std::vector<int> block;      // sorted vertex subset A
  std::vector<int> order;      // state indices grouped class by class
  std::vector<long> offsets;   // class c = order[offsets[c] .. offsets[c+1])
  std::vector<int> class_of;   // state rank -> class index

  long num_classes() const { return static_cast<long>(offsets.size()) - 1; }
  std::span<const int> class_members(long c) const {
    return {order.data() + offsets[c], static_cast<size_t>(offsets[c + 1] - offsets[c])};
  }
  long class_size(long c) const { return offsets[c + 1] - offsets[c]; }
  long class_size_of_state(long s) const { return class_size(class_of[s]); }
};

/// Conditioning partition for resampling inside A (the operators mu_A / nu_A).
/// Requires |A| >= 2.
BlockPartition block_partition(const StateSpace& space, std::span<const int> A);

/// Conditioning on the observation at a single vertex x: the label sigma_x
/// (permutations), the occupation eta_x (single particle, slice), or the set
/// of labels at x (product space). Used for entropy/variance decompositions.
BlockPartition coordinate_partition(const StateSpace& space, int x);

// factorial / binomial helpers shared by the codecs (exact in 64-bit at desk scale)
std::int64_t factorial_i64(int n);
std::int64_t binomial_i64(int n, int k);

std::string space_name(const StateSpace& space);

}  // namespace entroscope
