#pragma once

#include "srkit/ambient.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srk {

// j is a 0-based block index: d-1 = n_0 + ... + n_{j-1} + delta, 0 <= delta < n_j.
struct SingletonBound {
  BigInt value;
  std::size_t exponent = 0;
  std::size_t j = 0;
  std::size_t delta = 0;
};

struct InducedBounds {
  BigInt singleton;
  BigInt hamming;
  std::optional<BigInt> plotkin;
  std::optional<BigInt> elias;
  std::optional<std::uint64_t> elias_w;  // minimizing radius
};

// Decomposition d-3 = n_0 + ... + n_{ell-1} + delta with 0 <= delta < n_ell.
struct ProjectiveBound {
  BigInt value;
  std::size_t ell = 0;
  std::size_t delta = 0;
  bool delta_zero = false;
  std::vector<Block> reduced;
};

struct MsrdBlockCount {
  BigInt bound;                       // the general estimate
  BigInt weak;                        // l + 1 + floor(q^m (q-1) / (q^n-1))
  std::optional<BigInt> divisible;    // n | d-3
  std::optional<BigInt> small_d;      // d <= n+2
  std::optional<BigInt> square;       // d <= n+2 and n = m >= 2
};

struct BoundEntry {
  std::string name;
  std::optional<BigInt> value;
  std::optional<std::uint64_t> linear;
  std::string note;
  bool best = false;
};

struct BoundReport {
  std::size_t d = 0;
  std::vector<BoundEntry> entries;
  std::vector<std::string> best;
  std::size_t covering_dimension = 0;
  const BoundEntry* find(const std::string& name) const;
};

void check_distance(const Profile& p, std::size_t d);

SingletonBound singleton_bound(const Profile& p, std::size_t d);
InducedBounds induced_bounds(const Profile& p, std::size_t d);
BigInt sphere_packing_bound(const Profile& p, std::size_t d);
ProjectiveBound projective_sphere_packing_bound(const Profile& p, std::size_t d);
std::optional<BigInt> total_distance_bound(const Profile& p, std::size_t d);
// Largest t allowed for a code of the given size with q^m = qm.
BigInt block_count_bound(std::size_t N, std::size_t d, const BigInt& qm, const BigInt& size);
std::size_t sphere_covering_dimension(const Profile& p, std::size_t d);
MsrdBlockCount msrd_block_count_bound(std::size_t n, std::size_t m, std::uint64_t q, std::size_t d);
BoundReport bound_report(const Profile& p, std::size_t d);

}  // namespace srk
