#include "cdcodes/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace cdc {

Mat Mat::identity(long k, const Field& f) {
  Mat m(k, k, f);
  for (long i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(rows, cols, field);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = field->sub(a[i], o.a[i]);
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(rows, cols, field);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = field->add(a[i], o.a[i]);
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols, rows, field);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) os << (j ? " " : "") << at(i, j);
    os << '\n';
  }
  return os.str();
}

namespace {

// in-place forward elimination to RREF; returns pivot columns
std::vector<long> eliminate(Mat& m) {
  const FieldSpec& F = *m.field;
  std::vector<long> pivots;
  long r = 0;
  for (long c = 0; c < m.cols && r < m.rows; ++c) {
    long sel = -1;
    for (long i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (long j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    long inv = F.inv(m.at(r, c));
    for (long j = 0; j < m.cols; ++j) m.at(r, j) = F.mul(inv, m.at(r, j));
    for (long i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      long f = m.at(i, c);
      for (long j = 0; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Mat reverse_cols(const Mat& m) {
  Mat r = m;
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) r.at(i, j) = m.at(i, m.cols - 1 - j);
  return r;
}

}  // namespace

long rank(const Mat& m) {
  Mat t = m;
  return static_cast<long>(eliminate(t).size());
}

Mat rref(const Mat& m) {
  Mat t = m;
  eliminate(t);
  return t;
}

Mat rrief(const Mat& m) {
  // reverse columns, RREF, reverse back; row order then has pivot columns
  // strictly decreasing, as required
  return reverse_cols(rref(reverse_cols(m)));
}

bool is_rref(const Mat& m) { return m == rref(m); }
bool is_rrief(const Mat& m) { return m == rrief(m); }

Subspace subspace_from(const Mat& m) {
  Mat t = m;
  long r = static_cast<long>(eliminate(t).size());
  Mat gen(r, m.cols, m.field);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < m.cols; ++j) gen.at(i, j) = t.at(i, j);
  return Subspace{m.cols, r, std::move(gen)};
}

long subspace_distance(const Subspace& u, const Subspace& v) {
  if (u.n != v.n)
    throw std::invalid_argument("subspace_distance: ambient mismatch");
  Mat st(u.k + v.k, u.n, u.gen.field);
  for (long i = 0; i < u.k; ++i)
    for (long j = 0; j < u.n; ++j) st.at(i, j) = u.gen.at(i, j);
  for (long i = 0; i < v.k; ++i)
    for (long j = 0; j < v.n; ++j) st.at(u.k + i, j) = v.gen.at(i, j);
  return 2 * rank(st) - u.k - v.k;
}

long hamming_distance(const Bits& a, const Bits& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming_distance: length mismatch");
  long d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

long weight(const Bits& a) {
  long w = 0;
  for (auto x : a) w += (x != 0);
  return w;
}

namespace {

// basis of the subspace of rs(m) vanishing on the given column set
Mat restricted_subbasis(const Mat& m, long lo, long hi /* zero on [lo,hi) */) {
  // rows of rref(m) combined so the window vanishes: solve on the window
  Mat r = rref(m);
  long k = rank(m);
  // coefficient system: combos x (k) with sum_i x_i r_i vanishing on window
  Mat sys(hi - lo, k, m.field);
  for (long c = lo; c < hi; ++c)
    for (long i = 0; i < k; ++i) sys.at(c - lo, i) = r.at(i, c);
  // nullspace of sys
  Mat e = sys;
  std::vector<long> piv = eliminate(e);
  std::vector<bool> is_piv(k, false);
  for (long c : piv) is_piv[c] = true;
  const FieldSpec& F = *m.field;
  Mat out(k - static_cast<long>(piv.size()), m.cols, m.field);
  long outi = 0;
  for (long freec = 0; freec < k; ++freec) {
    if (is_piv[freec]) continue;
    // nullspace vector: x[freec] = 1, pivots solve
    std::vector<long> x(k, 0);
    x[freec] = 1;
    for (size_t pi = 0; pi < piv.size(); ++pi)
      x[piv[pi]] = F.neg(e.at(static_cast<long>(pi), freec));
    for (long j = 0; j < m.cols; ++j) {
      long s = 0;
      for (long i = 0; i < k; ++i)
        if (x[i] != 0) s = F.add(s, F.mul(x[i], r.at(i, j)));
      out.at(outi, j) = s;
    }
    ++outi;
  }
  return out;
}

bool pivots_within(const Mat& m, const std::vector<long>& piv, long lo, long hi) {
  (void)m;
  for (long c : piv)
    if (c < lo || c >= hi) return false;
  return true;
}

}  // namespace

std::optional<Mat> rrbef(const Mat& m, long n1, long n2, long k1, long k2) {
  long n = m.cols;
  if (n1 + n2 > n || k1 + k2 != rank(m)) return std::nullopt;
  // upper rows vanish on the last n2 columns, lower rows on the first n1
  Mat upper = restricted_subbasis(m, n - n2, n);
  Mat lower = restricted_subbasis(m, 0, n1);
  if (upper.rows != k1 || lower.rows != k2) return std::nullopt;
  Mat u = rref(upper);
  {
    Mat t = upper;
    auto piv = eliminate(t);
    if (!pivots_within(t, piv, 0, n1)) return std::nullopt;
  }
  Mat l = rrief(lower);
  {
    Mat t = reverse_cols(lower);
    auto piv = eliminate(t);
    for (long& c : piv) c = n - 1 - c;
    if (!pivots_within(t, piv, n - n2, n)) return std::nullopt;
  }
  Mat out(k1 + k2, n, m.field);
  for (long i = 0; i < k1; ++i)
    for (long j = 0; j < n; ++j) out.at(i, j) = u.at(i, j);
  for (long i = 0; i < k2; ++i)
    for (long j = 0; j < n; ++j) out.at(k1 + i, j) = l.at(i, j);
  return out;
}

std::optional<Mat> rribef(const Mat& m, long n1, long n2, long k1, long k2) {
  long n = m.cols;
  if (n1 + n2 > n || k1 + k2 != rank(m)) return std::nullopt;
  // upper rows (k2 of them) vanish on the first n1 columns and are in RRIEF;
  // lower rows (k1) vanish on the last n2 columns and are in RREF
  Mat upper = restricted_subbasis(m, 0, n1);
  Mat lower = restricted_subbasis(m, n - n2, n);
  if (upper.rows != k2 || lower.rows != k1) return std::nullopt;
  Mat u = rrief(upper);
  {
    Mat t = reverse_cols(upper);
    auto piv = eliminate(t);
    for (long& c : piv) c = n - 1 - c;
    if (!pivots_within(t, piv, n - n2, n)) return std::nullopt;
  }
  Mat l = rref(lower);
  {
    Mat t = lower;
    auto piv = eliminate(t);
    if (!pivots_within(t, piv, 0, n1)) return std::nullopt;
  }
  Mat out(k1 + k2, n, m.field);
  for (long i = 0; i < k2; ++i)
    for (long j = 0; j < n; ++j) out.at(i, j) = u.at(i, j);
  for (long i = 0; i < k1; ++i)
    for (long j = 0; j < n; ++j) out.at(k2 + i, j) = l.at(i, j);
  return out;
}

std::optional<ProfileVector> profile_vector(const Subspace& s, Flavor flavor,
                                            long n1, long n2) {
  ProfileVector pv;
  pv.flavor = flavor;
  pv.bits.assign(s.n, 0);
  if (flavor == Flavor::identifying) {
    Mat t = s.gen;
    for (long c : eliminate(t)) pv.bits[c] = 1;
    return pv;
  }
  if (flavor == Flavor::inverse) {
    Mat t = reverse_cols(s.gen);
    for (long c : eliminate(t)) pv.bits[s.n - 1 - c] = 1;
    return pv;
  }
  pv.n1 = n1;
  pv.n2 = n2;
  pv.mid = s.n - n1 - n2;
  for (long k1 = 0; k1 <= s.k; ++k1) {
    long k2 = s.k - k1;
    auto form = (flavor == Flavor::bilateral) ? rrbef(s.gen, n1, n2, k1, k2)
                                              : rribef(s.gen, n1, n2, k1, k2);
    if (!form) continue;
    // pivots: RREF block within the first n1 columns, RRIEF block within the
    // last n2; read them off the canonical block matrix
    const Mat& f = *form;
    for (long i = 0; i < f.rows; ++i) {
      // leftmost or rightmost nonzero entry is the pivot of its block row
      long first = -1, last = -1;
      for (long j = 0; j < f.cols; ++j)
        if (f.at(i, j) != 0) {
          if (first < 0) first = j;
          last = j;
        }
      if (first < 0) return std::nullopt;
      if (first < n1)
        pv.bits[first] = 1;
      else
        pv.bits[last] = 1;
    }
    if (weight(pv.bits) != s.k) return std::nullopt;
    return pv;
  }
  return std::nullopt;
}

Mat strip_columns(const Mat& m, const Bits& bits) {
  long keep = 0;
  for (long j = 0; j < m.cols; ++j) keep += (bits[j] == 0);
  Mat out(m.rows, keep, m.field);
  for (long i = 0; i < m.rows; ++i) {
    long oc = 0;
    for (long j = 0; j < m.cols; ++j)
      if (bits[j] == 0) out.at(i, oc++) = m.at(i, j);
  }
  return out;
}

}  // namespace cdc
