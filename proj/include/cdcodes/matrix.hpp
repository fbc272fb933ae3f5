// Dense linear algebra over GF(q): rank, the four reduced echelon forms,
// profile vectors, and the subspace distance.
#pragma once

#include "cdcodes/gf.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cdc {

struct Mat {
  long rows = 0, cols = 0;
  Field field;
  std::vector<long> a;  // row-major element indices

  Mat() = default;
  Mat(long r, long c, Field f) : rows(r), cols(c), field(std::move(f)), a(r * c, 0) {}

  long& at(long r, long c) { return a[r * cols + c]; }
  long at(long r, long c) const { return a[r * cols + c]; }

  static Mat identity(long k, const Field& f);
  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool operator<(const Mat& o) const { return a < o.a; }
  bool is_zero() const;
  Mat operator-(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat transposed() const;
  std::string str() const;
};

long rank(const Mat& m);

// reduced row echelon form, same shape (zero rows sink to the bottom)
Mat rref(const Mat& m);
// reduced row inverse echelon form: pivots are rightmost nonzero entries,
// pivot columns strictly decreasing down the rows
Mat rrief(const Mat& m);

bool is_rref(const Mat& m);
bool is_rrief(const Mat& m);

struct Subspace {
  long n = 0, k = 0;
  Mat gen;  // k x n, RREF, no zero rows

  bool operator==(const Subspace& o) const { return gen == o.gen; }
  bool operator<(const Subspace& o) const { return gen.a < o.gen.a; }
};

// canonicalize the row space of m (drops zero rows)
Subspace subspace_from(const Mat& m);

// dim U + dim V - 2 dim(U ∩ V) = 2 rank([U; V]) - dim U - dim V
long subspace_distance(const Subspace& u, const Subspace& v);

using Bits = std::vector<std::uint8_t>;

long hamming_distance(const Bits& a, const Bits& b);
long weight(const Bits& a);

enum class Flavor { identifying, inverse, bilateral, inverse_bilateral };

struct ProfileVector {
  Flavor flavor = Flavor::identifying;
  Bits bits;
  // type triple (n1, n - n1 - n2, n2); meaningful for the bilateral flavors
  long n1 = 0, mid = 0, n2 = 0;

  long n() const { return static_cast<long>(bits.size()); }
  long k() const { return weight(bits); }
};

// block-structured canonical forms. Split semantics: the k1 rows supported
// on the first n1+mid columns come first (RREF, pivots inside the first n1
// columns), the k2 rows supported on the last mid+n2 columns follow (RRIEF,
// pivots inside the last n2 columns). Returns nothing if the row space does
// not decompose along the requested split.
std::optional<Mat> rrbef(const Mat& m, long n1, long n2, long k1, long k2);
// mirror: RRIEF block (pivots in the last n2 columns) on top, RREF block
// (pivots in the first n1 columns) at the bottom
std::optional<Mat> rribef(const Mat& m, long n1, long n2, long k1, long k2);

// ones mark pivot columns of the flavor's canonical form; for the bilateral
// flavors a type triple (n1, *, n2) must be supplied and a compatible split
// must exist (k1/k2 swept automatically)
std::optional<ProfileVector> profile_vector(const Subspace& s, Flavor flavor,
                                            long n1 = 0, long n2 = 0);

// matrix without the columns where bits is one
Mat strip_columns(const Mat& m, const Bits& bits);

}  // namespace cdc
