// Arithmetic for GF(p^e) with a deterministic modulus choice, plus extension
// fields GF(q^m) used to evaluate linearized polynomials.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdc {

// Elements are canonical indices in [0, q): the base-p digits of the index
// are the coefficients of the representing polynomial (constant term first).
struct FieldSpec {
  long p = 0;               // characteristic
  long e = 1;               // extension degree over the prime field
  long q = 0;               // p^e
  std::vector<long> modulus;  // monic irreducible, length e+1, constant first
                              // (for e = 1 this is [0, 1], i.e. x, by convention)

  long add(long a, long b) const;
  long sub(long a, long b) const;
  long neg(long a) const;
  long mul(long a, long b) const;
  long inv(long a) const;  // throws on a == 0
  long pow(long a, long long n) const;

  std::vector<long> to_digits(long a) const;    // base-p coefficients, size e
  long from_digits(const std::vector<long>& d) const;

 private:
  friend std::shared_ptr<const FieldSpec> field_new(long q);
  std::vector<long> mul_table_, inv_table_;  // built when q <= 256
  long mul_slow(long a, long b) const;
};

using Field = std::shared_ptr<const FieldSpec>;

// q must be a prime power; modulus is the irreducible monic polynomial of
// degree e over GF(p) whose non-leading coefficient vector encodes the
// smallest integer in base p (deterministic across runs)
Field field_new(long q);

bool is_prime_power(long q, long* p_out = nullptr, long* e_out = nullptr);

// dense polynomials over a base field, coefficient index = degree
using Poly = std::vector<long>;

// GF(q^m) on the polynomial basis 1, x, ..., x^{m-1}
struct ExtFieldSpec {
  Field base;
  long m = 1;
  Poly modulus;  // monic irreducible of degree m over base, constant first

  // elements are coefficient vectors of length m over the base field
  using Elem = std::vector<long>;

  Elem zero() const { return Elem(m, 0); }
  Elem one() const;
  Elem gen(long i) const;  // basis element x^i, 0 <= i < m
  bool is_zero(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(long c, const Elem& a) const;  // c in the base field
  Elem inv(const Elem& a) const;
  Elem frobenius(const Elem& a, long i) const;  // a^(q^i)

  // to_vector / from_vector are the identity on the polynomial basis
  std::vector<long> to_vector(const Elem& a) const { return a; }
  Elem from_vector(const std::vector<long>& v) const;

 private:
  friend std::shared_ptr<const ExtFieldSpec> ext_field(Field base, long m);
  std::vector<long> frob_;  // m x m matrix of the q-power map, row-major
};

using ExtField = std::shared_ptr<const ExtFieldSpec>;

// deterministic: smallest monic irreducible of degree m over the base,
// ordered by the base-q integer encoded by the non-leading coefficients
ExtField ext_field(Field base, long m);

}  // namespace cdc
