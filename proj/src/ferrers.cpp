#include "cdcodes/ferrers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cdc {

long FerrersDiagram::dots() const {
  return std::accumulate(gamma.begin(), gamma.end(), 0L);
}

long DotPattern::dots() const {
  long d = 0;
  for (auto c : cell) d += (c != 0);
  return d;
}

DotPattern DotPattern::full(long m, long n) {
  return DotPattern{m, n, std::vector<std::uint8_t>(m * n, 1)};
}

DotPattern DotPattern::empty(long m, long n) {
  return DotPattern{m, n, std::vector<std::uint8_t>(m * n, 0)};
}

FerrersDiagram ferrers(std::vector<long> gamma, long m) {
  FerrersDiagram f;
  f.n = static_cast<long>(gamma.size());
  for (size_t j = 0; j + 1 < gamma.size(); ++j)
    if (gamma[j] > gamma[j + 1])
      throw std::invalid_argument("ferrers: column counts must be nondecreasing");
  long top = gamma.empty() ? 0 : gamma.back();
  if (top < 0) throw std::invalid_argument("ferrers: negative column count");
  f.m = (m < 0) ? top : m;
  if (top > f.m) throw std::invalid_argument("ferrers: column count exceeds rows");
  f.gamma = std::move(gamma);
  return f;
}

DotPattern inverse(const FerrersDiagram& f) {
  DotPattern p = DotPattern::empty(f.m, f.n);
  for (long j = 0; j < f.n; ++j)
    for (long i = 0; i < f.gamma[f.n - 1 - j]; ++i) p.set(i, j);
  return p;
}

FerrersDiagram transpose(const FerrersDiagram& f) {
  // row i of f holds rho_i = #{j : gamma_j > i} dots; reading the rows from
  // the bottom up gives the nondecreasing column counts of the transpose
  std::vector<long> g(f.m, 0);
  for (long i = 0; i < f.m; ++i) {
    long rho = 0;
    for (long j = 0; j < f.n; ++j) rho += (f.gamma[j] > i);
    g[f.m - 1 - i] = rho;
  }
  FerrersDiagram t;
  t.m = f.n;
  t.n = f.m;
  t.gamma = std::move(g);
  return t;
}

DotPattern to_pattern(const FerrersDiagram& f) {
  DotPattern p = DotPattern::empty(f.m, f.n);
  for (long j = 0; j < f.n; ++j)
    for (long i = 0; i < f.gamma[j]; ++i) p.set(i, j);
  return p;
}

std::optional<FerrersDiagram> pattern_as_ferrers(const DotPattern& p) {
  std::vector<long> gamma(p.n, 0);
  for (long j = 0; j < p.n; ++j) {
    long cnt = 0;
    while (cnt < p.m && p.has(cnt, j)) ++cnt;
    for (long i = cnt; i < p.m; ++i)
      if (p.has(i, j)) return std::nullopt;  // a gap inside the column
    gamma[j] = cnt;
  }
  for (long j = 0; j + 1 < p.n; ++j)
    if (gamma[j] > gamma[j + 1]) return std::nullopt;
  FerrersDiagram f;
  f.m = p.m;
  f.n = p.n;
  f.gamma = std::move(gamma);
  return f;
}

namespace {

// stripped-grid column index: zero-bit columns keep their relative order
std::vector<long> stripped_index(const Bits& bits) {
  std::vector<long> idx(bits.size(), -1);
  long c = 0;
  for (size_t j = 0; j < bits.size(); ++j)
    if (bits[j] == 0) idx[j] = c++;
  return idx;
}

std::vector<long> ones_ascending(const Bits& bits, long lo, long hi) {
  std::vector<long> out;
  for (long j = lo; j < hi; ++j)
    if (bits[j]) out.push_back(j);
  return out;
}

}  // namespace

DotPattern from_echelon_form(const ProfileVector& v) {
  const long n = v.n();
  const long k = v.k();
  DotPattern p = DotPattern::empty(k, n - k);
  const std::vector<long> col = stripped_index(v.bits);

  auto rref_row = [&](long row, long pivot, long hi) {
    // free positions to the right of the pivot, up to column hi
    for (long c = pivot + 1; c < hi; ++c)
      if (v.bits[c] == 0) p.set(row, col[c]);
  };
  auto rrief_row = [&](long row, long pivot, long lo) {
    // free positions to the left of the pivot, down to column lo
    for (long c = lo; c < pivot; ++c)
      if (v.bits[c] == 0) p.set(row, col[c]);
  };

  switch (v.flavor) {
    case Flavor::identifying: {
      auto piv = ones_ascending(v.bits, 0, n);
      for (long r = 0; r < k; ++r) rref_row(r, piv[r], n);
      break;
    }
    case Flavor::inverse: {
      auto piv = ones_ascending(v.bits, 0, n);
      for (long r = 0; r < k; ++r) rrief_row(r, piv[k - 1 - r], 0);
      break;
    }
    case Flavor::bilateral: {
      // upper rows pivot in the first n1 columns and vanish on the last n2;
      // lower rows pivot in the last n2 columns and vanish on the first n1
      auto up = ones_ascending(v.bits, 0, v.n1);
      auto lo = ones_ascending(v.bits, n - v.n2, n);
      const long k1 = static_cast<long>(up.size());
      for (long r = 0; r < k1; ++r) rref_row(r, up[r], v.n1 + v.mid);
      for (size_t r = 0; r < lo.size(); ++r)
        rrief_row(k1 + static_cast<long>(r), lo[lo.size() - 1 - r], v.n1);
      break;
    }
    case Flavor::inverse_bilateral: {
      // upper rows pivot in the last n2 columns and vanish on the first n1;
      // lower rows pivot in the first n1 columns and vanish on the last n2
      auto up = ones_ascending(v.bits, n - v.n2, n);
      auto lo = ones_ascending(v.bits, 0, v.n1);
      const long k2 = static_cast<long>(up.size());
      for (size_t r = 0; r < up.size(); ++r)
        rrief_row(static_cast<long>(r), up[up.size() - 1 - r], v.n1);
      for (size_t r = 0; r < lo.size(); ++r)
        rref_row(k2 + static_cast<long>(r), lo[r], v.n1 + v.mid);
      break;
    }
  }
  return p;
}

long singleton_bound(const DotPattern& p, long delta) {
  if (delta < 1) throw std::invalid_argument("singleton_bound: delta < 1");
  long best = -1;
  for (long i = 0; i < delta; ++i) {
    // discard the first i rows and the rightmost delta-1-i columns
    long keep_cols = p.n - (delta - 1 - i);
    long cnt = 0;
    for (long r = i; r < p.m; ++r)
      for (long c = 0; c < keep_cols; ++c) cnt += p.has(r, c);
    if (best < 0 || cnt < best) best = cnt;
  }
  return best;
}

long singleton_bound(const FerrersDiagram& f, long delta) {
  return singleton_bound(to_pattern(f), delta);
}

DotPattern bilateral_pattern(const FerrersDiagram& left, long middle_cols,
                             const FerrersDiagram& right, long k1, long k2) {
  if (left.m > k1 || right.m > k2)
    throw std::invalid_argument("bilateral_pattern: block height exceeded");
  const long n1 = left.n, n2 = right.n;
  DotPattern p = DotPattern::empty(k1 + k2, n1 + middle_cols + n2);
  for (long r = 0; r < k1; ++r)
    for (long c = 0; c < n1; ++c)
      if (r < left.m && left.has_dot(r, c)) p.set(r, c);
  for (long r = 0; r < k1 + k2; ++r)
    for (long c = 0; c < middle_cols; ++c) p.set(r, n1 + c);
  DotPattern inv = inverse(right);
  for (long r = 0; r < k2; ++r)
    for (long c = 0; c < n2; ++c)
      if (r < inv.m && inv.has(r, c)) p.set(k1 + r, n1 + middle_cols + c);
  return p;
}

}  // namespace cdc
