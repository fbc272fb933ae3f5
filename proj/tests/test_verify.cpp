#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdcodes/verify.hpp"

#include <cstdlib>

using namespace cdc;

namespace {

Bits bits(const std::string& s) {
  Bits b;
  for (char ch : s) b.push_back(ch == '1');
  return b;
}

}  // namespace

TEST_CASE("exhaustive verification of the lifted code") {
  VerifyReport rep = verify_cdc_exhaustive(lifted_mrd(2, 6, 3, 2), 4);
  CHECK(rep.pass());
  CHECK(rep.mode == "exhaustive");
  CHECK(rep.pairs_checked == 64 * 63 / 2);
  CHECK(rep.min_distance_observed == 4);
  CHECK(rep.formula_size == 64);
  CHECK(rep.enumerated_size == 64);
  CHECK(rep.str().find("PASS") != std::string::npos);

  // an inflated distance claim turns into recorded violations
  VerifyReport bad = verify_cdc_exhaustive(lifted_mrd(2, 6, 3, 2), 6);
  CHECK(!bad.pass());
  CHECK(bad.min_distance_observed == 4);
  CHECK(!bad.violations.empty());
  CHECK(bad.str().find("FAIL") != std::string::npos);
}

TEST_CASE("exhaustive verification of the two-block family") {
  CodeFamily f = parallel(2, 6, 3, 2, coset_grmc(2, 6, 3, 2));
  VerifyReport rep = verify_cdc_exhaustive(f, 4);
  CHECK(rep.pass());
  CHECK(rep.formula_size == 71);
  CHECK(rep.enumerated_size == 71);
  CHECK(rep.pairs_checked == 71 * 70 / 2);
  CHECK(rep.min_distance_observed == 4);
}

TEST_CASE("exhaustive verification refuses oversized families") {
  CHECK_THROWS_WITH_AS(verify_cdc_exhaustive(theorem2(2, 3), 6),
                       doctest::Contains("exceeds budget"),
                       std::runtime_error);
}

TEST_CASE("budget override through the environment") {
  // the default budget is 2^24 unless CDCODES_BUDGET says otherwise
  unsetenv("CDCODES_BUDGET");
  CHECK(default_budget() == (std::uint64_t(1) << 24));
  setenv("CDCODES_BUDGET", "1000", 1);
  CHECK(default_budget() == 1000);
  setenv("CDCODES_BUDGET", "junk", 1);
  CHECK(default_budget() == (std::uint64_t(1) << 24));
  unsetenv("CDCODES_BUDGET");
}

TEST_CASE("sampled verification is deterministic per seed") {
  CodeFamily f = lifted_mrd(2, 8, 4, 2);
  VerifyReport a = verify_cdc_sampled(f, 4, 11, 500);
  VerifyReport b = verify_cdc_sampled(f, 4, 11, 500);
  CHECK(a.str() == b.str());
  CHECK(a.pass());
  CHECK(a.mode == "sampled");
  CHECK(a.seed == 11);
  CHECK(a.pairs_checked <= 500);
  CHECK(a.min_distance_observed >= 4);
}

TEST_CASE("sampled verification catches an overclaimed distance") {
  CodeFamily f = lifted_mrd(2, 6, 3, 2);
  VerifyReport rep = verify_cdc_sampled(f, 6, 1, 2000);
  CHECK(!rep.pass());
  CHECK(rep.min_distance_observed == 4);
}

TEST_CASE("explicit subspace lists, including duplicates") {
  auto subs = lifted_mrd(2, 6, 3, 2).enumerate(1 << 20);
  VerifyReport ok = verify_subspaces(subs, 4);
  CHECK(ok.pass());
  subs.push_back(subs.front());  // plant a duplicate: distance 0
  VerifyReport dup = verify_subspaces(subs, 4);
  CHECK(!dup.pass());
  CHECK(dup.min_distance_observed == 0);
}

TEST_CASE("constant-weight vector checks") {
  std::vector<Bits> good = {bits("11110000"), bits("11001100"),
                            bits("00111100")};
  VerifyReport rep = verify_constant_weight(good, 4);
  CHECK(rep.pass());
  CHECK(rep.min_distance_observed == 4);

  std::vector<Bits> uneven = {bits("11110000"), bits("11100000")};
  CHECK(!verify_constant_weight(uneven, 2).pass());

  std::vector<Bits> close = {bits("11110000"), bits("11101000")};
  CHECK(!verify_constant_weight(close, 4).pass());

  CHECK(!verify_constant_weight({}, 2).pass());
}

TEST_CASE("rank-metric code checks") {
  LinearMatCode lin = to_linear(gabidulin(2, 3, 3, 2));
  VerifyReport ok = verify_rank_code(lin, 2);
  CHECK(ok.pass());
  CHECK(ok.min_distance_observed == 2);
  CHECK(ok.pairs_checked == 63);

  VerifyReport bad = verify_rank_code(lin, 3);
  CHECK(!bad.pass());

  // zero-dimensional codes pass vacuously
  LinearMatCode empty{2, 3, 3, field_new(2), {}};
  CHECK(verify_rank_code(empty, 5).pass());

  CHECK_THROWS_AS(verify_rank_code(lin, 2, /*budget=*/10), std::runtime_error);
}
