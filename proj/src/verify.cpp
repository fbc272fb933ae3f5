#include "cdcodes/verify.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

namespace cdc {

std::string VerifyReport::str() const {
  std::ostringstream os;
  os << "mode=" << mode;
  if (mode == "sampled") os << " seed=" << seed;
  os << " pairs=" << pairs_checked << " claimed=" << claimed
     << " min_observed=" << min_distance_observed;
  if (formula_size != 0)
    os << " formula_size=" << formula_size
       << " enumerated_size=" << enumerated_size;
  os << " violations=" << violations.size()
     << (pass() ? " PASS" : " FAIL");
  for (const auto& v : violations) os << "\n  violation: " << v;
  return os.str();
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CDCODES_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t(1) << 24;
}

namespace {

long pair_distance(const Subspace& a, const Subspace& b) {
  return subspace_distance(a, b);
}

void note_pair(VerifyReport& rep, long d, const std::string& who) {
  ++rep.pairs_checked;
  if (rep.min_distance_observed < 0 || d < rep.min_distance_observed)
    rep.min_distance_observed = d;
  if (d < rep.claimed)
    rep.violations.push_back(who + " distance " + std::to_string(d));
}

}  // namespace

VerifyReport verify_cdc_exhaustive(const CodeFamily& family, long claimed,
                                   std::uint64_t budget) {
  VerifyReport rep;
  rep.mode = "exhaustive";
  rep.claimed = claimed;
  rep.formula_size = family.size();
  if (rep.formula_size > Int(budget)) {
    std::ostringstream os;
    os << "verify_cdc_exhaustive: family size " << rep.formula_size
       << " exceeds budget " << budget;
    throw std::runtime_error(os.str());
  }
  std::vector<Subspace> subs = family.enumerate(budget);
  std::set<Subspace> dedup(subs.begin(), subs.end());
  rep.enumerated_size = static_cast<long>(dedup.size());
  if (dedup.size() != subs.size())
    rep.violations.push_back("duplicate members: enumerated " +
                             std::to_string(subs.size()) + " but only " +
                             std::to_string(dedup.size()) + " distinct");
  if (rep.enumerated_size != rep.formula_size)
    rep.violations.push_back("size mismatch: formula vs enumeration");
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = i + 1; j < subs.size(); ++j) {
      if (subs[i] == subs[j]) continue;  // already reported as duplicate
      note_pair(rep, pair_distance(subs[i], subs[j]),
                "members " + std::to_string(i) + "," + std::to_string(j));
    }
  return rep;
}

VerifyReport verify_cdc_sampled(const CodeFamily& family, long claimed,
                                std::uint64_t seed, std::uint64_t samples) {
  VerifyReport rep;
  rep.mode = "sampled";
  rep.seed = seed;
  rep.claimed = claimed;
  rep.formula_size = family.size();
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Subspace a = family.sample(rng, /*proportional=*/true);
    Subspace b = family.sample(rng, /*proportional=*/false);
    if (a == b) continue;  // the same codeword drawn twice
    note_pair(rep, pair_distance(a, b), "sample " + std::to_string(s));
  }
  return rep;
}

VerifyReport verify_subspaces(const std::vector<Subspace>& subs,
                              long claimed) {
  VerifyReport rep;
  rep.mode = "exhaustive";
  rep.claimed = claimed;
  rep.formula_size = static_cast<long>(subs.size());
  rep.enumerated_size = rep.formula_size;
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = i + 1; j < subs.size(); ++j)
      note_pair(rep, pair_distance(subs[i], subs[j]),
                "members " + std::to_string(i) + "," + std::to_string(j));
  return rep;
}

VerifyReport verify_constant_weight(const std::vector<Bits>& vecs,
                                    long claimed) {
  VerifyReport rep;
  rep.mode = "exhaustive";
  rep.claimed = claimed;
  rep.formula_size = static_cast<long>(vecs.size());
  rep.enumerated_size = rep.formula_size;
  if (vecs.empty()) {
    rep.violations.push_back("empty vector set");
    return rep;
  }
  long w = weight(vecs[0]);
  for (size_t i = 1; i < vecs.size(); ++i)
    if (weight(vecs[i]) != w)
      rep.violations.push_back("vector " + std::to_string(i) +
                               " breaks constant weight " + std::to_string(w));
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = i + 1; j < vecs.size(); ++j)
      note_pair(rep, hamming_distance(vecs[i], vecs[j]),
                "vectors " + std::to_string(i) + "," + std::to_string(j));
  return rep;
}

VerifyReport verify_rank_code(const LinearMatCode& code, long claimed,
                              std::uint64_t budget) {
  VerifyReport rep;
  rep.mode = "exhaustive";
  rep.claimed = claimed;
  rep.formula_size = code.size();
  rep.enumerated_size = rep.formula_size;
  if (code.dim() == 0) return rep;  // vacuous
  long d = min_rank_distance(code, budget);
  if (d < 0) {
    std::ostringstream os;
    os << "verify_rank_code: " << code.size() - 1
       << " nonzero words exceed budget " << budget;
    throw std::runtime_error(os.str());
  }
  rep.pairs_checked = (code.size() - 1).convert_to<std::uint64_t>();
  rep.min_distance_observed = d;
  if (d < claimed)
    rep.violations.push_back("minimum rank " + std::to_string(d) +
                             " below claimed " + std::to_string(claimed));
  return rep;
}

}  // namespace cdc
