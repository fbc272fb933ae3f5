#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdcodes/gf.hpp"

#include <random>

using namespace cdc;

TEST_CASE("prime power detection") {
  long p = 0, e = 0;
  CHECK(is_prime_power(2, &p, &e));
  CHECK(p == 2);
  CHECK(e == 1);
  CHECK(is_prime_power(9, &p, &e));
  CHECK(p == 3);
  CHECK(e == 2);
  CHECK(is_prime_power(16, &p, &e));
  CHECK(p == 2);
  CHECK(e == 4);
  CHECK(is_prime_power(121, &p, &e));
  CHECK(p == 11);
  CHECK(e == 2);
  CHECK(!is_prime_power(1));
  CHECK(!is_prime_power(6));
  CHECK(!is_prime_power(10));
  CHECK(!is_prime_power(12));
  CHECK(!is_prime_power(100));
  CHECK_THROWS_AS(field_new(6), std::invalid_argument);
  CHECK_THROWS_AS(field_new(1), std::invalid_argument);
}

TEST_CASE("prime field arithmetic is modular") {
  for (long p : {2L, 3L, 5L, 7L}) {
    Field f = field_new(p);
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b) {
        CHECK(f->add(a, b) == (a + b) % p);
        CHECK(f->mul(a, b) == (a * b) % p);
        CHECK(f->sub(a, b) == ((a - b) % p + p) % p);
      }
  }
}

TEST_CASE("field axioms hold for small prime powers") {
  for (long q : {2L, 3L, 4L, 5L, 8L, 9L}) {
    Field f = field_new(q);
    CAPTURE(q);
    // exhaustive: q^3 <= 729 triples
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (long c = 0; c < q; ++c) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    for (long a = 0; a < q; ++a) {
      CHECK(f->add(a, 0) == a);
      CHECK(f->mul(a, 1) == a);
      CHECK(f->mul(a, 0) == 0);
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) {
        CHECK(f->mul(a, f->inv(a)) == 1);
        // nonzero elements form a group of order q-1
        CHECK(f->pow(a, q - 1) == 1);
      }
    }
    CHECK_THROWS_AS(f->inv(0), std::domain_error);
    // characteristic: p copies of 1 sum to 0
    long s = 0;
    for (long i = 0; i < f->p; ++i) s = f->add(s, 1);
    CHECK(s == 0);
  }
}

TEST_CASE("larger field spot checks") {
  for (long q : {16L, 25L, 27L}) {
    Field f = field_new(q);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> el(0, q - 1);
    for (int t = 0; t < 500; ++t) {
      long a = el(rng), b = el(rng), c = el(rng);
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->pow(a, q) == a);  // x^q = x in GF(q)
    }
  }
}

TEST_CASE("digit encoding round-trips") {
  for (long q : {4L, 8L, 9L, 16L, 27L}) {
    Field f = field_new(q);
    for (long a = 0; a < q; ++a) {
      auto d = f->to_digits(a);
      CHECK(static_cast<long>(d.size()) == f->e);
      for (long x : d) CHECK(x < f->p);
      CHECK(f->from_digits(d) == a);
    }
  }
}

TEST_CASE("GF(4) uses the unique irreducible x^2+x+1") {
  Field f = field_new(4);
  CHECK(f->modulus == std::vector<long>{1, 1, 1});
}

TEST_CASE("frobenius x -> x^p is an additive field automorphism") {
  for (long q : {8L, 9L, 16L}) {
    Field f = field_new(q);
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b) {
        CHECK(f->pow(f->add(a, b), f->p) ==
              f->add(f->pow(a, f->p), f->pow(b, f->p)));
        CHECK(f->pow(f->mul(a, b), f->p) ==
              f->mul(f->pow(a, f->p), f->pow(b, f->p)));
      }
  }
}

TEST_CASE("extension field GF(2^3) behaves as a field") {
  Field base = field_new(2);
  ExtField E = ext_field(base, 3);
  auto one = E->one();
  CHECK(!E->is_zero(one));
  CHECK(E->is_zero(E->zero()));
  // enumerate all 8 elements as coefficient vectors
  std::vector<ExtFieldSpec::Elem> elems;
  for (long i = 0; i < 8; ++i)
    elems.push_back({i & 1, (i >> 1) & 1, (i >> 2) & 1});
  for (const auto& a : elems) {
    CHECK(E->mul(a, one) == a);
    CHECK(E->add(a, E->zero()) == a);
    if (!E->is_zero(a)) {
      CHECK(E->mul(a, E->inv(a)) == one);
      // multiplicative order divides 7 (prime), so a^7 = 1
      auto p = one;
      for (int i = 0; i < 7; ++i) p = E->mul(p, a);
      CHECK(p == one);
    }
    // frobenius is the q-power map and has order m
    CHECK(E->frobenius(a, 1) == E->mul(a, a));
    CHECK(E->frobenius(a, 3) == a);
    for (const auto& b : elems) {
      CHECK(E->frobenius(E->add(a, b), 1) ==
            E->add(E->frobenius(a, 1), E->frobenius(b, 1)));
      CHECK(E->mul(a, b) == E->mul(b, a));
    }
  }
  // basis elements are distinct unit vectors
  for (long i = 0; i < 3; ++i) {
    auto g = E->gen(i);
    for (long j = 0; j < 3; ++j) CHECK(g[j] == (i == j ? 1 : 0));
  }
}

TEST_CASE("extension of a non-prime base field") {
  Field base = field_new(4);
  ExtField E = ext_field(base, 2);  // GF(16) over GF(4)
  auto one = E->one();
  std::vector<ExtFieldSpec::Elem> elems;
  for (long i = 0; i < 16; ++i) elems.push_back({i % 4, i / 4});
  for (const auto& a : elems) {
    if (E->is_zero(a)) continue;
    CHECK(E->mul(a, E->inv(a)) == one);
    // frobenius(.,1) is the (q=4)-power map
    auto a4 = E->mul(E->mul(a, a), E->mul(a, a));
    CHECK(E->frobenius(a, 1) == a4);
    CHECK(E->frobenius(a, 2) == a);
  }
  // scale by base-field scalars distributes
  for (long c = 0; c < 4; ++c)
    for (const auto& a : elems)
      CHECK(E->scale(c, a) ==
            E->mul(ExtFieldSpec::Elem{c, 0}, a));
}
