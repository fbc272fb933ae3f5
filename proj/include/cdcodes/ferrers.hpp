// Ferrers diagrams, their inverse / transposed / bilateral variants, dot
// patterns extracted from echelon forms, and the dimension bound.
#pragma once

#include "cdcodes/matrix.hpp"

#include <optional>
#include <vector>

namespace cdc {

// column j carries gamma[j] dots occupying the top rows; gamma is
// nondecreasing, gamma.back() == m, dots right-justified row-wise
struct FerrersDiagram {
  long m = 0, n = 0;
  std::vector<long> gamma;

  long dots() const;
  bool has_dot(long r, long c) const { return r < gamma[c]; }
};

// explicit cell set inside an m x n grid; used for the bilateral and
// inverse-bilateral shapes that are not plain diagrams
struct DotPattern {
  long m = 0, n = 0;
  std::vector<std::uint8_t> cell;  // row-major flags

  bool has(long r, long c) const { return cell[r * n + c] != 0; }
  void set(long r, long c) { cell[r * n + c] = 1; }
  long dots() const;
  static DotPattern full(long m, long n);
  static DotPattern empty(long m, long n);
};

FerrersDiagram ferrers(std::vector<long> gamma, long m = -1);

// gamma reversed, dots kept in the top rows (no longer right-justified)
DotPattern inverse(const FerrersDiagram& f);
// rows and columns exchanged; a Ferrers diagram again
FerrersDiagram transpose(const FerrersDiagram& f);

DotPattern to_pattern(const FerrersDiagram& f);
// reads a right-justified pattern back as a diagram if it is one
std::optional<FerrersDiagram> pattern_as_ferrers(const DotPattern& p);

// dot cells of the echelon Ferrers form of a profile vector, in the k x
// (n - k) grid left after deleting the pivot columns. Row order matches the
// canonical form: RREF rows by increasing pivot, RRIEF rows by decreasing
// pivot; for the bilateral flavors the printed order (upper block first).
DotPattern from_echelon_form(const ProfileVector& v);

// min over i in [0, delta) of the dots outside the first i rows and outside
// the rightmost delta-1-i columns
long singleton_bound(const FerrersDiagram& f, long delta);
// the same count applied to an arbitrary pattern (no optimality claim)
long singleton_bound(const DotPattern& p, long delta);

// left k1 x n1 diagram, full k x middle_cols block, right k2 x n2 inverse
// diagram, assembled on one grid
DotPattern bilateral_pattern(const FerrersDiagram& left, long middle_cols,
                             const FerrersDiagram& right, long k1, long k2);

}  // namespace cdc
