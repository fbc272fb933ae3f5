// Machine verification: minimum subspace distance (exhaustive or seeded
// sampling), constant-weight Hamming checks, and rank-distance checks.
#pragma once

#include "cdcodes/constructions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cdc {

struct VerifyReport {
  std::string mode;  // "exhaustive" or "sampled"
  std::uint64_t seed = 0;
  std::uint64_t pairs_checked = 0;
  long claimed = 0;
  long min_distance_observed = -1;  // -1 when no pair was checked
  std::vector<std::string> violations;
  Int formula_size = 0;
  Int enumerated_size = 0;

  bool pass() const { return violations.empty(); }
  std::string str() const;
};

// enumeration budget: CDCODES_BUDGET environment variable, else 2^24
std::uint64_t default_budget();

// enumerates the family, reconciles the size formula, and checks every pair
VerifyReport verify_cdc_exhaustive(const CodeFamily& family, long claimed,
                                   std::uint64_t budget = default_budget());
// checks `samples` independent pairs; the first codeword of each pair is
// drawn from a size-weighted part, the second from a uniformly chosen part,
// so cross-part pairs are well represented; deterministic given the seed
VerifyReport verify_cdc_sampled(const CodeFamily& family, long claimed,
                                std::uint64_t seed, std::uint64_t samples);
// pairwise check over explicit generator matrices (rows taken at face value)
VerifyReport verify_subspaces(const std::vector<Subspace>& subs, long claimed);

VerifyReport verify_constant_weight(const std::vector<Bits>& vecs,
                                    long claimed);

VerifyReport verify_rank_code(const LinearMatCode& code, long claimed,
                              std::uint64_t budget = default_budget());

}  // namespace cdc
