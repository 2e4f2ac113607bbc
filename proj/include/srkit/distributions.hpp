#pragma once

#include "srkit/code.hpp"

#include <map>
#include <optional>
#include <vector>

namespace srk {

using RankVec = std::vector<std::size_t>;

struct SumRankDistribution {
  std::vector<BigInt> counts;  // index r = 0..N
  bool operator==(const SumRankDistribution&) const = default;
};

struct RankListDistribution {
  std::map<RankVec, BigInt> counts;  // nonzero entries only
  bool operator==(const RankListDistribution&) const = default;
};

struct SupportDistribution {
  std::map<SubspaceTuple, BigInt> counts;  // nonzero entries only
  bool operator==(const SupportDistribution&) const = default;
};

struct Distributions {
  SumRankDistribution sumrank;
  RankListDistribution ranklist;
  SupportDistribution support;
};

Distributions brute_distributions(const LinearCode& c, const Limits& limits = Limits::defaults());
RankListDistribution ranklist_of(const SupportDistribution& s);
SumRankDistribution sumrank_of(const RankListDistribution& r, std::size_t N);

SupportDistribution macwilliams_support(const SupportDistribution& w, const BigInt& size, const ProfilePtr& p,
                                        const Limits& limits = Limits::defaults());
RankListDistribution macwilliams_ranklist(const RankListDistribution& w, const BigInt& size, const Profile& p);
// Both sides of the binomial-moment identity for every u <= n.
bool binomial_moment_identity(const RankListDistribution& c, const RankListDistribution& dual, const BigInt& size,
                              const Profile& p);
bool binomial_moment_check(const LinearCode& c, const Limits& limits = Limits::defaults());

BigInt f_ell(const RankVec& u, long long ell, std::uint64_t q);
// Support count of an MSRD code with equal m at any U of dimension vector u.
BigInt msrd_support_distribution(const Profile& p, std::size_t d, const RankVec& u);

BigInt omega(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d, const RankVec& u);
BigInt omega_hat(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d, const RankVec& u);
// Greedy left fill of the non-increasingly sorted shape with |u| = d+1.
RankVec omega_tilde(const RankVec& shape, std::size_t d);
// Closed form of omega at omega_tilde.
BigInt omega_tilde_value(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d);

struct OmegaVerdict {
  bool excluded = false;
  std::optional<RankVec> witness;
  std::optional<BigInt> value;
  std::size_t checked = 0;
  bool fast = false;
};

// Full scan in graded order: by |u|, then comparing from the last coordinate
// (smaller first), starting at |u| = d+1 and stopping at the first negative.
OmegaVerdict omega_scan(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d);
OmegaVerdict omega_fast(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d);
// The same checks for the dual criterion.
OmegaVerdict omega_hat_scan(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d);
OmegaVerdict omega_hat_fast(const RankVec& shape, std::size_t m, std::uint64_t q, std::size_t d);

struct ConjectureCase {
  RankVec shape;
  std::size_t m = 0;
  std::uint64_t q = 0;
  std::size_t d = 0;
  RankVec witness;
  BigInt value;
};

struct ConjectureReport {
  std::size_t instances = 0;
  std::size_t excluded_full = 0;
  std::size_t excluded_fast = 0;
  std::vector<ConjectureCase> counterexamples;
};

ConjectureReport conjecture_scan(std::size_t max_t, std::size_t max_n, const std::vector<std::uint64_t>& qs,
                                 std::size_t max_m);

}  // namespace srk
