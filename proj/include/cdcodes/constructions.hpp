// Constant-dimension subspace code constructions: lifted MRD, parallel,
// the four multilevel flavors, the two insertion (block-layout) families,
// the assembled large-parameter family, the combination checks, and the
// explicit vector data behind the published instances.
#pragma once

#include "cdcodes/ferrers.hpp"
#include "cdcodes/matrix.hpp"
#include "cdcodes/rank_metric.hpp"

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace cdc {

// one profile-vector slice of a family; member is null when the part cannot
// be indexed (size known by formula only), sample always works
struct Part {
  std::string label;
  ProfileVector profile;
  Int count;
  std::function<Subspace(const Int&)> member;
  std::function<Subspace(std::mt19937_64&)> sample;

  bool indexable() const { return static_cast<bool>(member); }
};

struct CodeFamily {
  long q = 0, n = 0, k = 0, min_dist = 0;  // claimed minimum distance 2*delta
  std::vector<Part> parts;
  std::string size_text;  // human-readable size formula

  Int size() const;
  // all members; throws if any part is not indexable or the total exceeds
  // the budget
  std::vector<Subspace> enumerate(std::uint64_t budget) const;
  // proportional weights parts by size, otherwise parts are drawn uniformly
  Subspace sample(std::mt19937_64& rng, bool proportional = false) const;
};

// place a free-coordinate grid (k x (n-k), rows in canonical order) into the
// echelon form described by the profile vector and return its row space
Subspace lift(const ProfileVector& v, const Mat& grid);

// {rs[I_k | A]} over a (k x (n-k), delta)-MRD code
CodeFamily lifted_mrd(long q, long n, long k, long delta);

// lifted MRD plus {rs[A | I_k]} over the supplied rank-restricted words
// (pairwise rank distance >= delta, ranks <= k - delta; both checked)
CodeFamily parallel(long q, long n, long k, long delta,
                    std::vector<Mat> grmc);
// rank <= k - delta words of the best coset of a nested delta-distance
// subcode inside the full matrix space; suits small parameters only
std::vector<Mat> coset_grmc(long q, long n, long k, long delta);

// union of lifted Ferrers-pattern codes over a constant-weight vector set
// with pairwise Hamming distance >= 2*delta; dims optionally truncates each
// part to a target dimension (default: full solver dimension capped by the
// pattern's dimension bound)
CodeFamily multilevel(long q, long n, long k, long delta,
                      const std::vector<Bits>& vecs,
                      const std::vector<long>& dims = {});
CodeFamily inverse_multilevel(long q, long n, long k, long delta,
                              const std::vector<Bits>& vecs,
                              const std::vector<long>& dims = {});
CodeFamily bilateral_multilevel(long q, long n, long k, long delta,
                                const std::vector<ProfileVector>& vecs,
                                const std::vector<long>& dims = {});
CodeFamily inverse_bilateral_multilevel(long q, long n, long k, long delta,
                                        const std::vector<ProfileVector>& vecs,
                                        const std::vector<long>& dims = {});

// union of a forward and an inverse multilevel family; requires
// d_H(v, vhat) >= 2 (s_vhat + delta) for every vector pair, with s_vhat
// looked up in s_map (default 0)
CodeFamily double_multilevel(const CodeFamily& c1, const CodeFamily& c2,
                             const std::map<Bits, long>& s_map = {});

// block-layout family  [0 0 M2 I^ 0 ; I M1 M3 0 0]  over coset pairs of
// nested delta-distance subcodes inside (b1, b2)-distance parents
CodeFamily insertion_lemma15(long q, long n1, long n2, long n3, long delta,
                             long delta1, long delta2, long b1, long b2);
// mirrored layout  [0 0 M3 M2 I^ ; 0 I M1 0 0]
CodeFamily insertion_lemma16(long q, long n1, long n2, long n3, long delta,
                             long delta1, long delta2, long b1, long b2);

// the assembled (6d, 2d, 3d) family of five parts; requires delta >= 3
CodeFamily theorem2(long q, long delta);

struct Theorem3Report {
  bool pass = true;
  std::vector<std::string> violations;
};
// combination conditions for gluing the four vector sets into one family:
// (1) d_H between identifying and inverse vectors >= 2*delta,
// (2)/(3) prefix/suffix distance-plus-weight-gap inequalities for the two
// bilateral sets against the identifying and inverse sets,
// (4) split Hamming distance >= 2*delta between the two bilateral sets
Theorem3Report theorem3_check(const std::vector<Bits>& A,
                              const std::vector<Bits>& Ahat,
                              const std::vector<ProfileVector>& B,
                              const std::vector<ProfileVector>& B1,
                              long delta);

// the published vector families for the three explicit parameter sets
struct CorollaryVectors {
  long n = 0, k = 0, delta = 0, n1 = 0, n2 = 0;
  std::vector<Bits> A, Ahat;
  std::vector<ProfileVector> B, B1;
};
CorollaryVectors corollary_vectors(int which);  // 4, 5, or 6

// staircase identifying vectors: (1..1 0..0) plus the shifted-block family
std::vector<Bits> lemma13_vectors(long n, long k, long delta);

// four-part family (staircase multilevel, rank-restricted parallel part,
// and two bilateral families); requires n >= 2k + delta and
// floor(k/2) >= 2 ceil(delta/2)
CodeFamily corollary3(long q, long n, long k, long delta);

}  // namespace cdc
