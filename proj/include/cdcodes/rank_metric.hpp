// Rank-metric codes: maximum-rank-distance (Gabidulin-style) codes, linear
// matrix codes with support constraints, nested coset families, low-rank
// sampling, and rank-distance verification helpers.
#pragma once

#include "cdcodes/bounds.hpp"
#include "cdcodes/ferrers.hpp"
#include "cdcodes/matrix.hpp"

#include <random>
#include <vector>

namespace cdc {

// little-endian base-q digits of idx, fixed length
std::vector<long> index_digits(Int idx, long q, long len);

// linear rank-metric code of rows x cols matrices over GF(q) with minimum
// rank distance delta, realized by linearized polynomials of q-degree below
// K = min(rows, cols) - delta + 1 over GF(q^M), M = max(rows, cols),
// evaluated at the polynomial basis points
struct MrdCode {
  long q = 0, rows = 0, cols = 0, delta = 0;
  long M = 0, K = 0, kdim = 0;  // kdim = M * K digits over GF(q)
  Field base;
  ExtField ext;

  Int size() const { return qpow(q, kdim); }

  // digit layout: K blocks of M digits, block i holding the coefficient of
  // x^(q^i) on the polynomial basis of GF(q^M)
  Mat codeword(const std::vector<long>& digits) const;
  Mat codeword(const Int& index) const;
  Mat codeword_from_coeffs(const std::vector<ExtFieldSpec::Elem>& coeffs) const;
  std::vector<Mat> basis() const;  // kdim unit-digit codewords
};

MrdCode gabidulin(long q, long rows, long cols, long delta);

// GF(q)-linear span of an explicit matrix basis
struct LinearMatCode {
  long q = 0, rows = 0, cols = 0;
  Field field;
  std::vector<Mat> basis;

  long dim() const { return static_cast<long>(basis.size()); }
  Int size() const { return qpow(q, dim()); }
  Mat member(const Int& index) const;
};

LinearMatCode to_linear(const MrdCode& c);

// largest subcode whose members vanish on every cell outside the pattern
LinearMatCode support_constrained_subcode(const LinearMatCode& parent,
                                          const DotPattern& support);

// span of the first dim basis elements
LinearMatCode truncate_code(const LinearMatCode& c, long dim);

// minimum rank over the nonzero span; enumerates size() - 1 words and
// returns -1 if that exceeds the budget
long min_rank_distance(const LinearMatCode& c, std::uint64_t budget);
// minimum rank of pairwise differences of a word list
long min_rank_distance(const std::vector<Mat>& words);

// cosets of the higher-distance subcode (q-degree below sub_K) inside the
// parent; transversal representatives have the subcode coefficient blocks
// set to zero and enumerate the top K - sub_K blocks in index order
struct CosetFamily {
  MrdCode parent;
  long sub_delta = 0, sub_K = 0;

  Int count() const { return qpow(parent.q, parent.M * (parent.K - sub_K)); }
  Int coset_size() const { return qpow(parent.q, parent.M * sub_K); }
  std::vector<long> rep_digits(const Int& coset) const;
  Mat rep(const Int& coset) const;
  Mat member(const Int& coset, const Int& inner) const;
};

CosetFamily coset_family(const MrdCode& parent, long sub_delta);

// all words of rank <= max_rank inside the coset that contains the most of
// them; a rank-restricted code realized as a quotient-code section
std::vector<Mat> grmc_from_cosets(const MrdCode& parent, long sub_delta,
                                  long max_rank);

// uniform random codeword
Mat sample_codeword(const MrdCode& c, std::mt19937_64& rng);
// random codeword of rank at most max_rank: a random linearized polynomial
// composed with the annihilator of a random (min - max_rank)-dim subspace of
// the evaluation-point span; requires K > min(rows, cols) - max_rank
Mat sample_low_rank(const MrdCode& c, long max_rank, std::mt19937_64& rng);

}  // namespace cdc
