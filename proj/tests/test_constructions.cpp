#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdcodes/bounds.hpp"
#include "cdcodes/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

using namespace cdc;

namespace {

Bits bits(const std::string& s) {
  Bits b;
  for (char ch : s) b.push_back(ch == '1');
  return b;
}

std::string str(const Bits& b) {
  std::string s;
  for (auto x : b) s += x ? '1' : '0';
  return s;
}

long min_pairwise_distance(const std::vector<Subspace>& subs) {
  long best = -1;
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = i + 1; j < subs.size(); ++j) {
      long d = subspace_distance(subs[i], subs[j]);
      if (best < 0 || d < best) best = d;
    }
  return best;
}

std::vector<Int> part_counts(const CodeFamily& f) {
  std::vector<Int> out;
  for (const auto& p : f.parts) out.push_back(p.count);
  return out;
}

}  // namespace

TEST_CASE("lifted code: size, distinctness, exhaustive distance") {
  CodeFamily f = lifted_mrd(2, 6, 3, 2);
  CHECK(f.size() == 64);
  CHECK(f.min_dist == 4);
  auto subs = f.enumerate(1 << 20);
  CHECK(subs.size() == 64);
  std::set<Subspace> dedup(subs.begin(), subs.end());
  CHECK(dedup.size() == 64);
  for (const auto& s : subs) {
    CHECK(s.k == 3);
    // identity block on the left: pivots in the first k columns
    auto p = profile_vector(s, Flavor::identifying);
    REQUIRE(p);
    CHECK(p->bits == bits("111000"));
  }
  CHECK(min_pairwise_distance(subs) == 4);
}

TEST_CASE("single-vector staircase family equals the lifted code") {
  CodeFamily a = lifted_mrd(2, 6, 3, 2);
  CodeFamily b = multilevel(2, 6, 3, 2, {bits("111000")});
  CHECK(a.size() == b.size());
  auto ea = a.enumerate(1 << 20);
  auto eb = b.enumerate(1 << 20);
  CHECK(std::set<Subspace>(ea.begin(), ea.end()) ==
        std::set<Subspace>(eb.begin(), eb.end()));
}

TEST_CASE("staircase profile vectors") {
  auto v = lemma13_vectors(8, 4, 2);
  REQUIRE(v.size() == 3);
  CHECK(str(v[0]) == "11110000");
  CHECK(str(v[1]) == "11001100");
  CHECK(str(v[2]) == "00111100");
  for (const auto& x : v) CHECK(weight(x) == 4);
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      CHECK(hamming_distance(v[i], v[j]) >= 4);

  auto w = lemma13_vectors(11, 4, 2);
  REQUIRE(w.size() == 3);
  CHECK(str(w[0]) == "11110000000");
  CHECK(str(w[1]) == "11001100000");
  CHECK(str(w[2]) == "00111100000");

  CHECK_THROWS_AS(lemma13_vectors(5, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(lemma13_vectors(12, 4, 3), std::invalid_argument);
}

TEST_CASE("staircase family size matches the closed form") {
  CodeFamily f = multilevel(2, 8, 3, 1, lemma13_vectors(8, 3, 1));
  CHECK(f.size() == lower_bound_lemma13(2, 8, 3, 1));
  CHECK(f.size() == 61440);  // 2^15 + 2^14 + 2^13 + 2^12
  CHECK(part_counts(f) ==
        std::vector<Int>{32768, 16384, 8192, 4096});
}

TEST_CASE("multilevel rejects close or malformed vectors") {
  CHECK_THROWS(multilevel(2, 6, 3, 2, {bits("111000"), bits("110100")}));
  CHECK_THROWS(multilevel(2, 6, 3, 2, {bits("110000")}));  // weight 2 != k
  CHECK_THROWS(multilevel(2, 6, 3, 2, {bits("1110000")}));  // wrong length
  // dims above the pattern's capacity
  CHECK_THROWS(multilevel(2, 6, 3, 2, {bits("111000")}, {7}));
}

TEST_CASE("reversal duality between forward and inverse families") {
  auto vecs = lemma13_vectors(8, 4, 2);
  std::vector<Bits> rev = vecs;
  for (auto& v : rev) std::reverse(v.begin(), v.end());
  CodeFamily fwd = multilevel(2, 8, 4, 2, vecs);
  CodeFamily inv = inverse_multilevel(2, 8, 4, 2, rev);
  CHECK(part_counts(fwd) == part_counts(inv));
  CHECK(fwd.size() == inv.size());
  // inverse members carry the reversed profiles and keep the distance
  auto subs = inv.enumerate(1 << 22);
  CHECK(Int(subs.size()) == inv.size());
  std::set<Subspace> dedup(subs.begin(), subs.end());
  CHECK(dedup.size() == subs.size());
}

TEST_CASE("pattern dimension survives empty grid columns") {
  // the last staircase vector at (11,4,2) leaves 4 empty grid columns; the
  // part must still realize dimension 15 = (n-k-delta)(k-delta+1)
  CodeFamily f =
      multilevel(2, 11, 4, 2, lemma13_vectors(11, 4, 2), {21, 17, 15});
  CHECK(part_counts(f) == std::vector<Int>{2097152, 131072, 32768});
}

TEST_CASE("rank-restricted parallel family at small parameters") {
  auto grmc = coset_grmc(2, 6, 3, 2);
  CHECK(grmc.size() == 7);
  for (const auto& w : grmc) CHECK(rank(w) <= 1);
  CodeFamily f = parallel(2, 6, 3, 2, grmc);
  CHECK(f.size() == 71);
  auto subs = f.enumerate(1 << 20);
  CHECK(subs.size() == 71);
  CHECK(std::set<Subspace>(subs.begin(), subs.end()).size() == 71);
  CHECK(min_pairwise_distance(subs) == 4);
}

TEST_CASE("parallel rejects words that break its invariants") {
  Field f2 = field_new(2);
  Mat high(3, 3, f2);  // rank 2 exceeds k - delta = 1
  high.at(0, 0) = high.at(1, 1) = 1;
  CHECK_THROWS(parallel(2, 6, 3, 2, {high}));
}

TEST_CASE("block-insertion families: sizes at the assembled parameters") {
  CodeFamily a = insertion_lemma15(2, 9, 6, 3, 3, 6, 3, 2, 1);
  CHECK(a.size() == qpow(2, 21));
  CHECK(a.n == 18);
  CHECK(a.k == 9);
  CHECK(a.min_dist == 6);
  CodeFamily b = insertion_lemma16(2, 9, 6, 3, 3, 6, 3, 2, 1);
  CHECK(b.size() == qpow(2, 18));
  CHECK(b.n == 18);
  CHECK(b.k == 9);

  // a prefix of each family respects the claimed distance and is distinct
  for (const CodeFamily* f : {&a, &b}) {
    std::vector<Subspace> subs;
    for (Int i = 0; i < 48; ++i) subs.push_back(f->parts[0].member(i));
    CHECK(std::set<Subspace>(subs.begin(), subs.end()).size() == subs.size());
    CHECK(min_pairwise_distance(subs) >= 6);
  }
}

TEST_CASE("block-insertion parameter validation") {
  // inner-distance pair must cover delta: b1 + b2 >= delta
  CHECK_THROWS(insertion_lemma15(2, 9, 6, 3, 3, 6, 3, 1, 1));
  // b_i must stay within [1, delta]
  CHECK_THROWS(insertion_lemma15(2, 9, 6, 3, 3, 6, 3, 0, 3));
  CHECK_THROWS(insertion_lemma15(2, 9, 6, 3, 3, 6, 3, 4, 3));
}

TEST_CASE("assembled family at the smallest admissible parameter") {
  CodeFamily f = theorem2(2, 3);
  CHECK(f.n == 18);
  CHECK(f.k == 9);
  CHECK(f.min_dist == 6);
  CHECK(f.size() == lower_bound_theorem2(2, 3));
  CHECK(f.size() == Int("9271545225290474496"));
  CHECK(part_counts(f) ==
        std::vector<Int>{Int("9223372036854775808"),
                         Int("48173119697085440"), Int("68719476736"),
                         Int("16777216"), Int("2097152"), Int("262144")});
  CHECK_THROWS(theorem2(2, 2));

  // sampled members look right: dimension, ambient, pairwise distance
  std::mt19937_64 rng(4);
  std::vector<Subspace> subs;
  for (int t = 0; t < 40; ++t) subs.push_back(f.sample(rng, t % 2 == 0));
  for (const auto& s : subs) {
    CHECK(s.n == 18);
    CHECK(s.k == 9);
  }
  std::sort(subs.begin(), subs.end());
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
  CHECK(min_pairwise_distance(subs) >= 6);
}

TEST_CASE("four-part family at its smallest parameters") {
  CodeFamily f = corollary3(2, 11, 4, 2);
  CHECK(f.n == 11);
  CHECK(f.k == 4);
  CHECK(f.min_dist == 4);
  CHECK(f.size() == 2265478);
  CHECK(f.size() == lower_bound_corollary3(2, 11, 4, 2));
  CHECK(part_counts(f) ==
        std::vector<Int>{2097152, 131072, 32768, 4446, 16, 16, 8});
  std::mt19937_64 rng(6);
  std::vector<Subspace> subs;
  for (int t = 0; t < 60; ++t) subs.push_back(f.sample(rng, t % 2 == 0));
  std::sort(subs.begin(), subs.end());
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
  CHECK(min_pairwise_distance(subs) >= 4);
}

TEST_CASE("forward/inverse union enforces the separation rule") {
  CodeFamily c1 = multilevel(2, 8, 4, 2, {bits("11110000")});
  CodeFamily ok = inverse_multilevel(2, 8, 4, 2, {bits("00001111")});
  CodeFamily merged = double_multilevel(c1, ok);
  CHECK(merged.size() == c1.size() + ok.size());
  CHECK(merged.parts.size() == 2);

  // distance 2 < 2*(0 + delta): must be rejected
  CodeFamily bad = inverse_multilevel(2, 8, 4, 2, {bits("01111000")});
  CHECK_THROWS(double_multilevel(c1, bad));
  // a shift parameter tightens the requirement: 2*(s + delta) = 10 > 8
  std::map<Bits, long> s_map;
  s_map[bits("00001111")] = 3;
  CHECK_THROWS(double_multilevel(c1, ok, s_map));
  s_map[bits("00001111")] = 2;  // exactly 2*(2+2) = 8: still admissible
  CHECK(double_multilevel(c1, ok, s_map).size() == c1.size() + ok.size());
}

// independent recomputation of the four combination conditions
namespace oracle {

long cond23(const Bits& half_v, const Bits& half_u) {
  return hamming_distance(half_v, half_u) +
         std::abs(weight(half_v) - weight(half_u));
}

bool combination_ok(const CorollaryVectors& cv,
                    const std::vector<ProfileVector>& B1, long delta) {
  long n1 = cv.n1, n2 = cv.n2;
  auto pre = [&](const Bits& b) { return Bits(b.begin(), b.begin() + n1); };
  auto suf = [&](const Bits& b) { return Bits(b.end() - n2, b.end()); };
  for (const auto& a : cv.A)
    for (const auto& ah : cv.Ahat)
      if (hamming_distance(a, ah) < 2 * delta) return false;
  for (const auto* grp : {&cv.B, &B1})
    for (const auto& v : *grp) {
      for (const auto& a : cv.A)
        if (cond23(pre(v.bits), pre(a)) < 2 * delta) return false;
      for (const auto& ah : cv.Ahat)
        if (cond23(suf(v.bits), suf(ah)) < 2 * delta) return false;
    }
  for (const auto& b : cv.B)
    for (const auto& b1 : B1)
      if (hamming_distance(pre(b.bits), pre(b1.bits)) +
              hamming_distance(suf(b.bits), suf(b1.bits)) <
          2 * delta)
        return false;
  return true;
}

}  // namespace oracle

TEST_CASE("published vector families satisfy the combination conditions") {
  for (int which : {4, 5, 6}) {
    CAPTURE(which);
    CorollaryVectors cv = corollary_vectors(which);
    CHECK(cv.delta == 3);
    for (const auto& a : cv.A) {
      CHECK(static_cast<long>(a.size()) == cv.n);
      CHECK(weight(a) == cv.k);
    }
    for (const auto& a : cv.Ahat) CHECK(weight(a) == cv.k);
    for (const auto& grp : {cv.B, cv.B1})
      for (const auto& v : grp) {
        CHECK(v.n() == cv.n);
        CHECK(v.k() == cv.k);
        CHECK(v.n1 == cv.n1);
        CHECK(v.n2 == cv.n2);
      }
    auto rep = theorem3_check(cv.A, cv.Ahat, cv.B, cv.B1, cv.delta);
    CHECK(rep.pass);
    CHECK(rep.violations.empty());
    CHECK(oracle::combination_ok(cv, cv.B1, cv.delta));
  }
  CHECK_THROWS(corollary_vectors(7));
}

TEST_CASE("every harmful single-bit mutation of the split vectors is caught") {
  for (int which : {4, 5, 6}) {
    CAPTURE(which);
    CorollaryVectors cv = corollary_vectors(which);
    for (size_t vi = 0; vi < cv.B1.size(); ++vi)
      for (long pos = 0; pos < cv.n; ++pos) {
        auto mutated = cv.B1;
        mutated[vi].bits[pos] = !mutated[vi].bits[pos];
        bool expect = oracle::combination_ok(cv, mutated, cv.delta);
        auto rep = theorem3_check(cv.A, cv.Ahat, cv.B, mutated, cv.delta);
        CAPTURE(vi);
        CAPTURE(pos);
        CHECK(rep.pass == expect);
      }
  }
}

TEST_CASE("combination check flags type mismatches") {
  CorollaryVectors cv = corollary_vectors(4);
  auto bad = cv.B1;
  bad[0].n1 += 1;
  auto rep = theorem3_check(cv.A, cv.Ahat, cv.B, bad, cv.delta);
  CHECK(!rep.pass);
}
