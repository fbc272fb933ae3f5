#include "cdcodes/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cdc {

namespace {

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

// pivot column of each row, in the row order of the canonical form
std::vector<long> pivots_in_row_order(const ProfileVector& v) {
  const long n = v.n();
  std::vector<long> piv;
  switch (v.flavor) {
    case Flavor::identifying:
      return ones_ascending(v.bits, 0, n);
    case Flavor::inverse: {
      piv = ones_ascending(v.bits, 0, n);
      std::reverse(piv.begin(), piv.end());
      return piv;
    }
    case Flavor::bilateral: {
      piv = ones_ascending(v.bits, 0, v.n1);
      auto lo = ones_ascending(v.bits, n - v.n2, n);
      piv.insert(piv.end(), lo.rbegin(), lo.rend());
      return piv;
    }
    case Flavor::inverse_bilateral: {
      auto up = ones_ascending(v.bits, n - v.n2, n);
      piv.assign(up.rbegin(), up.rend());
      auto lo = ones_ascending(v.bits, 0, v.n1);
      piv.insert(piv.end(), lo.begin(), lo.end());
      return piv;
    }
  }
  throw std::logic_error("pivots_in_row_order: bad flavor");
}

Bits runs(std::initializer_list<std::pair<int, long>> rs) {
  Bits b;
  for (auto [bit, count] : rs)
    b.insert(b.end(), count, static_cast<std::uint8_t>(bit));
  return b;
}

Mat random_member(const LinearMatCode& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(0, c.q - 1);
  const FieldSpec& F = *c.field;
  Mat out(c.rows, c.cols, c.field);
  for (long i = 0; i < c.dim(); ++i) {
    long d = dist(rng);
    if (d == 0) continue;
    for (size_t e = 0; e < out.a.size(); ++e)
      out.a[e] = F.add(out.a[e], F.mul(d, c.basis[i].a[e]));
  }
  return out;
}

Int random_power_index(long q, long ndigits, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(0, q - 1);
  Int idx = 0;
  for (long i = 0; i < ndigits; ++i) idx = idx * q + dist(rng);
  return idx;
}

void check_constant_weight(const std::vector<Bits>& vecs, long n, long k,
                           long delta, const char* who) {
  for (size_t i = 0; i < vecs.size(); ++i) {
    if (static_cast<long>(vecs[i].size()) != n || weight(vecs[i]) != k)
      throw std::invalid_argument(std::string(who) +
                                  ": vector " + std::to_string(i) +
                                  " has wrong length or weight");
    for (size_t j = i + 1; j < vecs.size(); ++j)
      if (hamming_distance(vecs[i], vecs[j]) < 2 * delta)
        throw std::invalid_argument(std::string(who) + ": vectors " +
                                    std::to_string(i) + " and " +
                                    std::to_string(j) +
                                    " are too close in Hamming distance");
  }
}

// part built from a linear grid code: every member is lift(profile, word)
Part linear_part(std::string label, const ProfileVector& profile,
                 LinearMatCode code) {
  Part p;
  p.label = std::move(label);
  p.profile = profile;
  p.count = code.size();
  auto shared = std::make_shared<LinearMatCode>(std::move(code));
  p.member = [profile, shared](const Int& idx) {
    return lift(profile, shared->member(idx));
  };
  p.sample = [profile, shared](std::mt19937_64& rng) {
    return lift(profile, random_member(*shared, rng));
  };
  return p;
}

ProfileVector make_profile(Flavor f, Bits bits, long n1 = 0, long n2 = 0) {
  ProfileVector v;
  v.flavor = f;
  v.n1 = n1;
  v.n2 = n2;
  v.mid = static_cast<long>(bits.size()) - n1 - n2;
  v.bits = std::move(bits);
  return v;
}

}  // namespace

Int CodeFamily::size() const {
  Int s = 0;
  for (const auto& p : parts) s += p.count;
  return s;
}

std::vector<Subspace> CodeFamily::enumerate(std::uint64_t budget) const {
  if (size() > Int(budget))
    throw std::runtime_error("enumerate: family size exceeds budget");
  std::vector<Subspace> out;
  for (const auto& p : parts) {
    if (!p.indexable())
      throw std::runtime_error("enumerate: part '" + p.label +
                               "' is not indexable");
    for (Int i = 0; i < p.count; ++i) out.push_back(p.member(i));
  }
  return out;
}

Subspace CodeFamily::sample(std::mt19937_64& rng, bool proportional) const {
  if (parts.empty()) throw std::runtime_error("sample: empty family");
  size_t pick = 0;
  if (proportional) {
    long double total = 0, acc = 0;
    for (const auto& p : parts) total += p.count.convert_to<long double>();
    std::uniform_real_distribution<long double> dist(0, total);
    long double x = dist(rng);
    for (size_t i = 0; i < parts.size(); ++i) {
      acc += parts[i].count.convert_to<long double>();
      if (x <= acc || i + 1 == parts.size()) {
        pick = i;
        break;
      }
    }
  } else {
    std::uniform_int_distribution<size_t> dist(0, parts.size() - 1);
    pick = dist(rng);
  }
  return parts[pick].sample(rng);
}

Subspace lift(const ProfileVector& v, const Mat& grid) {
  const long n = v.n();
  const long k = v.k();
  if (grid.rows != k || grid.cols != n - k)
    throw std::invalid_argument("lift: grid shape mismatch");
  std::vector<long> piv = pivots_in_row_order(v);
  std::vector<long> col = stripped_index(v.bits);
  Mat out(k, n, grid.field);
  for (long r = 0; r < k; ++r) {
    out.at(r, piv[r]) = 1;
    for (long c = 0; c < n; ++c)
      if (v.bits[c] == 0) out.at(r, c) = grid.at(r, col[c]);
  }
  Subspace s = subspace_from(out);
  if (s.k != k) throw std::logic_error("lift: rank drop");
  return s;
}

CodeFamily lifted_mrd(long q, long n, long k, long delta) {
  if (n < 2 * k || k < delta || delta < 1)
    throw std::invalid_argument("lifted_mrd: need n >= 2k >= 2 delta");
  CodeFamily f{q, n, k, 2 * delta, {}, {}};
  ProfileVector prof =
      make_profile(Flavor::identifying, runs({{1, k}, {0, n - k}}));
  MrdCode mrd = gabidulin(q, k, n - k, delta);
  f.parts.push_back(linear_part("lifted-mrd", prof, to_linear(mrd)));
  std::ostringstream os;
  os << "q^" << (n - k) * (k - delta + 1);
  f.size_text = os.str();
  return f;
}

std::vector<Mat> coset_grmc(long q, long n, long k, long delta) {
  if (delta < 2)
    throw std::invalid_argument("coset_grmc: needs delta >= 2");
  MrdCode parent = gabidulin(q, k, n - k, 1);
  return grmc_from_cosets(parent, delta, k - delta);
}

CodeFamily parallel(long q, long n, long k, long delta,
                    std::vector<Mat> grmc) {
  CodeFamily f = lifted_mrd(q, n, k, delta);
  for (size_t i = 0; i < grmc.size(); ++i) {
    if (grmc[i].rows != k || grmc[i].cols != n - k)
      throw std::invalid_argument("parallel: word shape mismatch");
    if (rank(grmc[i]) > k - delta)
      throw std::invalid_argument("parallel: word " + std::to_string(i) +
                                  " exceeds the rank bound");
  }
  if (grmc.size() <= 2048) {
    for (size_t i = 0; i < grmc.size(); ++i)
      for (size_t j = i + 1; j < grmc.size(); ++j)
        if (rank(grmc[i] - grmc[j]) < delta)
          throw std::invalid_argument(
              "parallel: words " + std::to_string(i) + " and " +
              std::to_string(j) + " are too close in rank distance");
  }
  ProfileVector prof =
      make_profile(Flavor::inverse, runs({{0, n - k}, {1, k}}));
  Part p;
  p.label = "rank-restricted";
  p.profile = prof;
  p.count = static_cast<long>(grmc.size());
  auto words = std::make_shared<std::vector<Mat>>(std::move(grmc));
  p.member = [prof, words](const Int& idx) {
    return lift(prof, words->at(idx.convert_to<size_t>()));
  };
  p.sample = [prof, words](std::mt19937_64& rng) {
    std::uniform_int_distribution<size_t> dist(0, words->size() - 1);
    return lift(prof, words->at(dist(rng)));
  };
  f.parts.push_back(std::move(p));
  f.size_text += " + " + std::to_string(words->size());
  return f;
}

namespace {

// distance-delta code supported on the pattern, as k x nk basis matrices.
// Empty rows and columns are trimmed first so the parent MRD lives on the
// smallest enclosing subgrid; constraining a full-grid parent instead can
// lose dimension when whole columns vanish.
LinearMatCode pattern_code(long q, long k, long nk, long delta,
                           const DotPattern& pattern) {
  Field fld = field_new(q);
  std::vector<long> rows_keep, cols_keep;
  for (long r = 0; r < pattern.m; ++r)
    for (long c = 0; c < pattern.n; ++c)
      if (pattern.has(r, c)) {
        rows_keep.push_back(r);
        break;
      }
  for (long c = 0; c < pattern.n; ++c)
    for (long r = 0; r < pattern.m; ++r)
      if (pattern.has(r, c)) {
        cols_keep.push_back(c);
        break;
      }
  long kr = static_cast<long>(rows_keep.size());
  long kc = static_cast<long>(cols_keep.size());
  if (kr < delta || kc < delta)  // no nonzero word of rank >= delta fits
    return LinearMatCode{q, k, nk, fld, {}};
  DotPattern subp = DotPattern::empty(kr, kc);
  for (long r = 0; r < kr; ++r)
    for (long c = 0; c < kc; ++c)
      if (pattern.has(rows_keep[r], cols_keep[c])) subp.set(r, c);
  MrdCode parent = gabidulin(q, kr, kc, delta);
  LinearMatCode sub = support_constrained_subcode(to_linear(parent), subp);
  LinearMatCode out{q, k, nk, fld, {}};
  for (const Mat& w : sub.basis) {
    Mat e(k, nk, fld);
    for (long r = 0; r < kr; ++r)
      for (long c = 0; c < kc; ++c)
        e.at(rows_keep[r], cols_keep[c]) = w.at(r, c);
    out.basis.push_back(std::move(e));
  }
  return out;
}

CodeFamily multilevel_impl(long q, long n, long k, long delta,
                           const std::vector<Bits>& vecs,
                           const std::vector<long>& dims, Flavor flavor,
                           const char* who) {
  check_constant_weight(vecs, n, k, delta, who);
  if (!dims.empty() && dims.size() != vecs.size())
    throw std::invalid_argument(std::string(who) + ": dims count mismatch");
  CodeFamily f{q, n, k, 2 * delta, {}, {}};
  std::ostringstream os;
  for (size_t i = 0; i < vecs.size(); ++i) {
    ProfileVector prof = make_profile(flavor, vecs[i]);
    DotPattern pattern = from_echelon_form(prof);
    LinearMatCode sub = pattern_code(q, k, n - k, delta, pattern);
    long target = dims.empty()
                      ? std::min<long>(sub.dim(), singleton_bound(pattern, delta))
                      : dims[i];
    if (sub.dim() < target)
      throw std::runtime_error(std::string(who) + ": pattern " +
                               std::to_string(i) + " supports only dimension " +
                               std::to_string(sub.dim()) + " < " +
                               std::to_string(target));
    f.parts.push_back(linear_part(std::string(who) + "-" + std::to_string(i),
                                  prof, truncate_code(sub, target)));
    os << (i ? " + " : "") << "q^" << target;
  }
  f.size_text = os.str();
  return f;
}

}  // namespace

CodeFamily multilevel(long q, long n, long k, long delta,
                      const std::vector<Bits>& vecs,
                      const std::vector<long>& dims) {
  return multilevel_impl(q, n, k, delta, vecs, dims, Flavor::identifying,
                         "multilevel");
}

CodeFamily inverse_multilevel(long q, long n, long k, long delta,
                              const std::vector<Bits>& vecs,
                              const std::vector<long>& dims) {
  return multilevel_impl(q, n, k, delta, vecs, dims, Flavor::inverse,
                         "inverse-multilevel");
}

namespace {

CodeFamily bilateral_impl(long q, long n, long k, long delta,
                          const std::vector<ProfileVector>& vecs,
                          const std::vector<long>& dims, Flavor flavor,
                          const char* who) {
  if (!dims.empty() && dims.size() != vecs.size())
    throw std::invalid_argument(std::string(who) + ": dims count mismatch");
  std::vector<Bits> raw;
  for (const auto& v : vecs) {
    if (v.flavor != flavor || v.n() != n)
      throw std::invalid_argument(std::string(who) + ": flavor/length mismatch");
    if (!vecs.empty() && (v.n1 != vecs[0].n1 || v.n2 != vecs[0].n2))
      throw std::invalid_argument(std::string(who) + ": type triple mismatch");
    raw.push_back(v.bits);
  }
  check_constant_weight(raw, n, k, delta, who);
  CodeFamily f{q, n, k, 2 * delta, {}, {}};
  std::ostringstream os;
  for (size_t i = 0; i < vecs.size(); ++i) {
    DotPattern pattern = from_echelon_form(vecs[i]);
    LinearMatCode sub = pattern_code(q, k, n - k, delta, pattern);
    long target = dims.empty() ? sub.dim() : dims[i];
    if (sub.dim() < target)
      throw std::runtime_error(std::string(who) + ": pattern " +
                               std::to_string(i) + " supports only dimension " +
                               std::to_string(sub.dim()) + " < " +
                               std::to_string(target));
    f.parts.push_back(linear_part(std::string(who) + "-" + std::to_string(i),
                                  vecs[i], truncate_code(sub, target)));
    os << (i ? " + " : "") << "q^" << target;
  }
  f.size_text = os.str();
  return f;
}

}  // namespace

CodeFamily bilateral_multilevel(long q, long n, long k, long delta,
                                const std::vector<ProfileVector>& vecs,
                                const std::vector<long>& dims) {
  return bilateral_impl(q, n, k, delta, vecs, dims, Flavor::bilateral,
                        "bilateral-multilevel");
}

CodeFamily inverse_bilateral_multilevel(long q, long n, long k, long delta,
                                        const std::vector<ProfileVector>& vecs,
                                        const std::vector<long>& dims) {
  return bilateral_impl(q, n, k, delta, vecs, dims, Flavor::inverse_bilateral,
                        "inverse-bilateral-multilevel");
}

CodeFamily double_multilevel(const CodeFamily& c1, const CodeFamily& c2,
                             const std::map<Bits, long>& s_map) {
  if (c1.q != c2.q || c1.n != c2.n || c1.k != c2.k ||
      c1.min_dist != c2.min_dist)
    throw std::invalid_argument("double_multilevel: parameter mismatch");
  long delta = c1.min_dist / 2;
  for (const auto& p1 : c1.parts)
    for (const auto& p2 : c2.parts) {
      auto it = s_map.find(p2.profile.bits);
      long s = (it == s_map.end()) ? 0 : it->second;
      if (hamming_distance(p1.profile.bits, p2.profile.bits) <
          2 * (s + delta))
        throw std::invalid_argument(
            "double_multilevel: parts '" + p1.label + "' and '" + p2.label +
            "' violate the distance requirement");
    }
  CodeFamily f = c1;
  f.parts.insert(f.parts.end(), c2.parts.begin(), c2.parts.end());
  f.size_text = c1.size_text + " + " + c2.size_text;
  return f;
}

namespace {

// a slot is either the coset family of a nested delta-distance subcode, or
// (when b == delta) the whole delta-distance code as a single coset
struct Slot {
  bool split = false;
  MrdCode code;
  CosetFamily fam;

  Int cosets() const { return split ? fam.count() : Int(1); }
  Int inner() const { return split ? fam.coset_size() : code.size(); }
  long coset_digits() const {
    return split ? code.M * (code.K - fam.sub_K) : 0;
  }
  Mat word(const Int& r, const Int& j) const {
    return split ? fam.member(r, j) : code.codeword(j);
  }
  Mat sample_word(const Int& r, std::mt19937_64& rng) const {
    long digits = split ? code.M * fam.sub_K : code.kdim;
    return word(r, random_power_index(code.q, digits, rng));
  }
};

Slot make_slot(long q, long rows, long cols, long b, long delta) {
  Slot s;
  s.code = gabidulin(q, rows, cols, b);
  if (b < delta) {
    s.split = true;
    s.fam = coset_family(s.code, delta);
  }
  return s;
}

void check_insertion_params(long n1, long n2, long n3, long delta,
                            long delta1, long delta2, long b1, long b2) {
  if (n1 <= delta1 || n2 <= delta2 || n3 < 1 || delta1 < 1 || delta2 < 1)
    throw std::invalid_argument("insertion: block sizes out of range");
  if (b1 < 1 || b2 < 1 || b1 > delta || b2 > delta || b1 + b2 < delta)
    throw std::invalid_argument(
        "insertion: need 1 <= b_i <= delta and b1 + b2 >= delta");
}

struct InsertionLayout {
  // origin column and word shape for the three slots, plus the grid row
  // offset of each (upper block starts at row 0, lower at delta2)
  long m1_row, m1_col, m2_row, m2_col, m3_row, m3_col;
};

CodeFamily insertion_impl(long q, long n1, long n2, long n3, long delta,
                          long delta1, long delta2, Slot slot1, Slot slot2,
                          MrdCode m3, ProfileVector prof,
                          const InsertionLayout& lay, const char* label) {
  const long n = n1 + n2 + n3;
  const long k = delta1 + delta2;
  CodeFamily f{q, n, k, 2 * delta, {}, {}};
  Int s = std::min(slot1.cosets(), slot2.cosets());
  Int inner1 = slot1.inner(), inner2 = slot2.inner(), m3sz = m3.size();
  auto col = stripped_index(prof.bits);
  auto s1 = std::make_shared<Slot>(std::move(slot1));
  auto s2 = std::make_shared<Slot>(std::move(slot2));
  auto m3p = std::make_shared<MrdCode>(std::move(m3));
  Field fld = m3p->base;

  auto assemble = [=](const Mat& w1, const Mat& w2, const Mat& w3) {
    Mat grid(k, n - k, fld);
    for (long i = 0; i < w1.rows; ++i)
      for (long c = 0; c < w1.cols; ++c)
        grid.at(lay.m1_row + i, col[lay.m1_col + c]) = w1.at(i, c);
    for (long i = 0; i < w2.rows; ++i)
      for (long c = 0; c < w2.cols; ++c)
        grid.at(lay.m2_row + i, col[lay.m2_col + c]) = w2.at(i, c);
    for (long i = 0; i < w3.rows; ++i)
      for (long c = 0; c < w3.cols; ++c)
        grid.at(lay.m3_row + i, col[lay.m3_col + c]) = w3.at(i, c);
    return lift(prof, grid);
  };

  Part p;
  p.label = label;
  p.profile = prof;
  p.count = s * inner1 * inner2 * m3sz;
  p.member = [=](const Int& idx) {
    Int rest = idx;
    Int i3 = rest % m3sz;
    rest /= m3sz;
    Int i2 = rest % inner2;
    rest /= inner2;
    Int i1 = rest % inner1;
    Int r = rest / inner1;
    return assemble(s1->word(r, i1), s2->word(r, i2), m3p->codeword(i3));
  };
  long rdigits = std::min(s1->coset_digits(), s2->coset_digits());
  p.sample = [=](std::mt19937_64& rng) {
    Int r = random_power_index(q, rdigits, rng);
    return assemble(s1->sample_word(r, rng), s2->sample_word(r, rng),
                    m3p->codeword(random_power_index(q, m3p->kdim, rng)));
  };
  f.parts.push_back(std::move(p));
  std::ostringstream os;
  os << label << ": " << s << " cosets x " << inner1 << " x " << inner2
     << " x " << m3sz;
  f.size_text = os.str();
  return f;
}

}  // namespace

CodeFamily insertion_lemma15(long q, long n1, long n2, long n3, long delta,
                             long delta1, long delta2, long b1, long b2) {
  check_insertion_params(n1, n2, n3, delta, delta1, delta2, b1, b2);
  const long n = n1 + n2 + n3;
  // column layout [delta1 | n1-delta1 | n3 | delta2 | n2-delta2]
  ProfileVector prof = make_profile(
      Flavor::inverse_bilateral,
      runs({{1, delta1}, {0, n1 - delta1}, {0, n3}, {1, delta2},
            {0, n2 - delta2}}),
      n1, n2);
  InsertionLayout lay;
  lay.m1_row = delta2;
  lay.m1_col = delta1;  // M1: delta1 x (n1-delta1)
  lay.m2_row = 0;
  lay.m2_col = n1;      // M2: delta2 x n3
  lay.m3_row = delta2;
  lay.m3_col = n1;      // M3: delta1 x n3
  return insertion_impl(q, n1, n2, n3, delta, delta1, delta2,
                        make_slot(q, delta1, n1 - delta1, b1, delta),
                        make_slot(q, delta2, n3, b2, delta),
                        gabidulin(q, delta1, n3, delta), prof, lay,
                        "insertion-a");
}

CodeFamily insertion_lemma16(long q, long n1, long n2, long n3, long delta,
                             long delta1, long delta2, long b1, long b2) {
  check_insertion_params(n1, n2, n3, delta, delta1, delta2, b1, b2);
  const long n = n1 + n2 + n3;
  // column layout [n1-delta1 | delta1 | n3 | n2-delta2 | delta2]
  ProfileVector prof = make_profile(
      Flavor::inverse_bilateral,
      runs({{0, n1 - delta1}, {1, delta1}, {0, n3}, {0, n2 - delta2},
            {1, delta2}}),
      n1, n2);
  (void)n;
  InsertionLayout lay;
  lay.m1_row = delta2;
  lay.m1_col = n1;           // M1: delta1 x n3
  lay.m2_row = 0;
  lay.m2_col = n1 + n3;      // M2: delta2 x (n2-delta2)
  lay.m3_row = 0;
  lay.m3_col = n1;           // M3: delta2 x n3
  return insertion_impl(q, n1, n2, n3, delta, delta1, delta2,
                        make_slot(q, delta1, n3, b1, delta),
                        make_slot(q, delta2, n2 - delta2, b2, delta),
                        gabidulin(q, delta2, n3, delta), prof, lay,
                        "insertion-b");
}

CodeFamily theorem2(long q, long delta) {
  if (delta < 3)
    throw std::invalid_argument("theorem2: needs delta >= 3");
  const long n = 6 * delta, k = 3 * delta;
  const long b1 = (delta + 1) / 2, b2 = delta / 2;
  CodeFamily f{q, n, k, 2 * delta, {}, {}};

  // forward lifted part
  CodeFamily c1 = lifted_mrd(q, n, k, delta);
  f.parts.push_back(c1.parts[0]);

  // reversed lifted part over rank-restricted words; size by formula
  {
    ProfileVector prof =
        make_profile(Flavor::inverse, runs({{0, n - k}, {1, k}}));
    MrdCode mrd = gabidulin(q, k, n - k, delta);
    Part p;
    p.label = "rank-restricted";
    p.profile = prof;
    p.count = 1;
    for (long i = delta; i <= 2 * delta; ++i)
      p.count += rank_distribution(q, 3 * delta, 3 * delta, delta, i);
    auto shared = std::make_shared<MrdCode>(std::move(mrd));
    long cap = 2 * delta;
    p.member = nullptr;  // no dense index over the rank-filtered subset
    p.sample = [prof, shared, cap](std::mt19937_64& rng) {
      return lift(prof, sample_low_rank(*shared, cap, rng));
    };
    f.parts.push_back(std::move(p));
  }

  // two bilateral parts
  {
    std::vector<ProfileVector> vecs = {
        make_profile(Flavor::bilateral,
                     runs({{1, 2 * delta}, {0, delta}, {0, delta},
                           {0, delta}, {1, delta}}),
                     3 * delta, 2 * delta),
        make_profile(Flavor::bilateral,
                     runs({{1, delta}, {0, delta}, {1, delta}, {0, delta},
                           {0, delta}, {1, delta}}),
                     3 * delta, 2 * delta)};
    std::vector<long> dims = {
        2 * delta * delta + 4 * delta + delta * ((delta + 1) / 2),
        delta * delta + 5 * delta};
    CodeFamily c3 = bilateral_multilevel(q, n, k, delta, vecs, dims);
    for (auto& p : c3.parts) f.parts.push_back(std::move(p));
  }

  // the two insertion families
  CodeFamily c4 = insertion_lemma15(q, 3 * delta, 2 * delta, delta, delta,
                                    2 * delta, delta, b1, b2);
  CodeFamily c5 = insertion_lemma16(q, 3 * delta, 2 * delta, delta, delta,
                                    2 * delta, delta, b1, b2);
  f.parts.push_back(std::move(c4.parts[0]));
  f.parts.push_back(std::move(c5.parts[0]));

  std::ostringstream os;
  os << "q^" << 6 * delta * delta + 3 * delta
     << " + 1 + sum a + q^"
     << 2 * delta * delta + 4 * delta + delta * b1 << " + q^"
     << delta * delta + 5 * delta << " + q^" << 5 * delta + delta * b1
     << " + q^" << 4 * delta + delta * b1;
  f.size_text = os.str();
  return f;
}

Theorem3Report theorem3_check(const std::vector<Bits>& A,
                              const std::vector<Bits>& Ahat,
                              const std::vector<ProfileVector>& B,
                              const std::vector<ProfileVector>& B1,
                              long delta) {
  Theorem3Report rep;
  auto fail = [&rep](std::string msg) {
    rep.pass = false;
    rep.violations.push_back(std::move(msg));
  };
  if (B.empty() && B1.empty()) return rep;
  long n1 = !B.empty() ? B[0].n1 : B1[0].n1;
  long n2 = !B.empty() ? B[0].n2 : B1[0].n2;
  for (const auto& grp : {&B, &B1})
    for (size_t i = 0; i < grp->size(); ++i)
      if ((*grp)[i].n1 != n1 || (*grp)[i].n2 != n2)
        fail("type triple mismatch in bilateral set");

  auto prefix = [n1](const Bits& b) { return Bits(b.begin(), b.begin() + n1); };
  auto suffix = [n2](const Bits& b) { return Bits(b.end() - n2, b.end()); };

  // (1) identifying vs inverse vectors
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < Ahat.size(); ++j)
      if (hamming_distance(A[i], Ahat[j]) < 2 * delta)
        fail("condition 1: A[" + std::to_string(i) + "] vs Ahat[" +
             std::to_string(j) + "]");

  // (2)/(3) prefix and suffix inequalities for the bilateral sets
  auto cond23 = [&](const std::vector<ProfileVector>& grp, const char* name,
                    int cond) {
    for (size_t b = 0; b < grp.size(); ++b) {
      Bits v1 = prefix(grp[b].bits), v2 = suffix(grp[b].bits);
      for (size_t i = 0; i < A.size(); ++i) {
        Bits u1 = prefix(A[i]);
        if (hamming_distance(v1, u1) +
                std::abs(weight(v1) - weight(u1)) < 2 * delta)
          fail("condition " + std::to_string(cond) + ": " + name + "[" +
               std::to_string(b) + "] prefix vs A[" + std::to_string(i) + "]");
      }
      for (size_t i = 0; i < Ahat.size(); ++i) {
        Bits u2 = suffix(Ahat[i]);
        if (hamming_distance(v2, u2) +
                std::abs(weight(v2) - weight(u2)) < 2 * delta)
          fail("condition " + std::to_string(cond) + ": " + name + "[" +
               std::to_string(b) + "] suffix vs Ahat[" + std::to_string(i) +
               "]");
      }
    }
  };
  cond23(B, "B", 2);
  cond23(B1, "B1", 3);

  // (4) split distance between the two bilateral sets
  for (size_t i = 0; i < B.size(); ++i)
    for (size_t j = 0; j < B1.size(); ++j)
      if (hamming_distance(prefix(B[i].bits), prefix(B1[j].bits)) +
              hamming_distance(suffix(B[i].bits), suffix(B1[j].bits)) <
          2 * delta)
        fail("condition 4: B[" + std::to_string(i) + "] vs B1[" +
             std::to_string(j) + "]");
  return rep;
}

CorollaryVectors corollary_vectors(int which) {
  CorollaryVectors cv;
  cv.delta = 3;
  cv.n2 = 6;
  auto bil = [&cv](Bits b) {
    return make_profile(Flavor::bilateral, std::move(b), cv.n1, cv.n2);
  };
  switch (which) {
    case 4:
      cv.n = 17;
      cv.k = 6;
      cv.n1 = 9;
      cv.A = {runs({{1, 6}, {0, 11}}),
              runs({{1, 3}, {0, 3}, {1, 3}, {0, 8}}),
              runs({{0, 3}, {1, 6}, {0, 8}})};
      cv.Ahat = {runs({{0, 11}, {1, 6}})};
      cv.B = {bil(runs({{1, 3}, {0, 8}, {0, 3}, {1, 3}})),
              bil(runs({{1, 1}, {0, 2}, {1, 2}, {0, 6}, {0, 2}, {1, 1},
                        {0, 1}, {1, 2}}))};
      cv.B1 = {bil(runs({{0, 2}, {1, 1}, {0, 2}, {1, 2}, {0, 4}, {1, 1},
                         {0, 1}, {1, 2}, {0, 2}}))};
      break;
    case 5:
      cv.n = 18;
      cv.k = 7;
      cv.n1 = 10;
      cv.A = {runs({{1, 7}, {0, 11}}),
              runs({{1, 4}, {0, 3}, {1, 3}, {0, 8}}),
              runs({{1, 1}, {0, 3}, {1, 6}, {0, 8}})};
      cv.Ahat = {runs({{0, 11}, {1, 7}})};
      cv.B = {bil(runs({{1, 4}, {0, 8}, {0, 3}, {1, 3}})),
              bil(runs({{1, 2}, {0, 2}, {1, 2}, {0, 6}, {0, 2}, {1, 1},
                        {0, 1}, {1, 2}})),
              bil(runs({{0, 2}, {1, 4}, {0, 6}, {0, 2}, {1, 2}, {0, 1},
                        {1, 1}}))};
      cv.B1 = {bil(runs({{0, 2}, {1, 2}, {0, 2}, {1, 2}, {0, 4}, {1, 1},
                         {0, 1}, {1, 2}, {0, 2}})),
               bil(runs({{0, 4}, {1, 4}, {0, 4}, {1, 2}, {0, 1}, {1, 1},
                         {0, 2}}))};
      break;
    case 6:
      cv.n = 19;
      cv.k = 7;
      cv.n1 = 10;
      cv.A = {runs({{1, 7}, {0, 12}}),
              runs({{1, 4}, {0, 3}, {1, 3}, {0, 9}}),
              runs({{1, 1}, {0, 3}, {1, 6}, {0, 9}})};
      cv.Ahat = {runs({{0, 12}, {1, 7}})};
      cv.B = {bil(runs({{1, 4}, {0, 9}, {0, 3}, {1, 3}})),
              bil(runs({{1, 2}, {0, 2}, {1, 2}, {0, 7}, {0, 2}, {1, 1},
                        {0, 1}, {1, 2}})),
              bil(runs({{0, 2}, {1, 4}, {0, 7}, {0, 2}, {1, 2}, {0, 1},
                        {1, 1}}))};
      cv.B1 = {bil(runs({{0, 2}, {1, 2}, {0, 2}, {1, 2}, {0, 5}, {1, 1},
                         {0, 1}, {1, 2}, {0, 2}})),
               bil(runs({{0, 4}, {1, 4}, {0, 5}, {1, 2}, {0, 1}, {1, 1},
                         {0, 2}}))};
      break;
    default:
      throw std::invalid_argument("corollary_vectors: which must be 4, 5, 6");
  }
  return cv;
}

std::vector<Bits> lemma13_vectors(long n, long k, long delta) {
  // the vector display itself only needs the runs to fit; callers that
  // build codes on these vectors impose their own stronger preconditions
  if (n < k + delta || k < 2 * delta)
    throw std::invalid_argument("lemma13_vectors: parameter violation");
  std::vector<Bits> out;
  out.push_back(runs({{1, k}, {0, n - k}}));
  for (long i = 1; i <= k / delta; ++i)
    out.push_back(runs({{1, k - i * delta},
                        {0, delta},
                        {1, i * delta},
                        {0, n - k - delta}}));
  return out;
}

namespace {

// columns of the stripped grid where every one of the first k1 rows has a
// dot; the shared fill region of a merged full diagram
std::vector<long> common_upper_columns(const DotPattern& p, long k1) {
  std::vector<long> cols;
  for (long c = 0; c < p.n; ++c) {
    bool all = true;
    for (long r = 0; r < k1 && all; ++r) all = p.has(r, c);
    if (all) cols.push_back(c);
  }
  return cols;
}

// part whose members fill only the shared upper region with words of a
// distance-delta code, everything else zero
Part region_part(std::string label, const ProfileVector& prof, long k,
                 long nk, long k1, long delta, long target, long q) {
  DotPattern pattern = from_echelon_form(prof);
  std::vector<long> region = common_upper_columns(pattern, k1);
  long R = static_cast<long>(region.size());
  MrdCode fill = gabidulin(q, k1, R, delta);
  if (fill.kdim < target)
    throw std::runtime_error(label + ": fill region supports only " +
                             std::to_string(fill.kdim) + " < " +
                             std::to_string(target));
  LinearMatCode lin = truncate_code(to_linear(fill), target);
  auto shared = std::make_shared<LinearMatCode>(std::move(lin));
  auto reg = std::make_shared<std::vector<long>>(std::move(region));
  Field fld = shared->field;
  auto place = [prof, shared, reg, fld, k, nk, k1](const Mat& w) {
    Mat grid(k, nk, fld);
    for (long i = 0; i < k1; ++i)
      for (size_t c = 0; c < reg->size(); ++c)
        grid.at(i, (*reg)[c]) = w.at(i, static_cast<long>(c));
    return lift(prof, grid);
  };
  Part p;
  p.label = std::move(label);
  p.profile = prof;
  p.count = shared->size();
  p.member = [place, shared](const Int& idx) {
    return place(shared->member(idx));
  };
  p.sample = [place, shared](std::mt19937_64& rng) {
    return place(random_member(*shared, rng));
  };
  return p;
}

}  // namespace

CodeFamily corollary3(long q, long n, long k, long delta) {
  const long ck = (k + 1) / 2, fk = k / 2;       // ceil(k/2), floor(k/2)
  const long cd = (delta + 1) / 2, fd = delta / 2;
  if (n < 2 * k + delta || fk < 2 * cd)
    throw std::invalid_argument("corollary3: parameter violation");
  const long t = std::min(ck / cd, fd > 0 ? fk / fd : ck / cd);
  const long n1 = k + delta, n2 = fk + delta;
  CodeFamily f{q, n, k, 2 * delta, {}, {}};

  // staircase multilevel part with the claimed per-vector dimensions
  {
    std::vector<Bits> vecs = lemma13_vectors(n, k, delta);
    std::vector<long> dims;
    dims.push_back((n - k) * (k - delta + 1));
    for (long i = 1; i < k / delta; ++i)
      dims.push_back((n - k) * (k - delta + 1) - i * delta * delta);
    dims.push_back((n - k - delta) * (k - delta + 1));
    CodeFamily c1 = multilevel(q, n, k, delta, vecs, dims);
    for (auto& p : c1.parts) f.parts.push_back(std::move(p));
  }

  // rank-restricted reversed part, size by formula
  {
    ProfileVector prof =
        make_profile(Flavor::inverse, runs({{0, n - k}, {1, k}}));
    MrdCode mrd = gabidulin(q, k, n - k, delta);
    Part p;
    p.label = "rank-restricted";
    p.profile = prof;
    p.count = 1;
    for (long i = delta; i <= k - delta; ++i)
      p.count += rank_distribution(q, k, n - k, delta, i);
    auto shared = std::make_shared<MrdCode>(std::move(mrd));
    long cap = k - delta;
    p.member = nullptr;
    p.sample = [prof, shared, cap](std::mt19937_64& rng) {
      return lift(prof, sample_low_rank(*shared, cap, rng));
    };
    f.parts.push_back(std::move(p));
  }

  // first bilateral family: t vectors, shared-region fill
  const long e3 = (n - k - 2 * delta + fd) * (ck - delta + 1);
  for (long j = 0; j < t; ++j) {
    ProfileVector prof = make_profile(
        Flavor::bilateral,
        runs({{1, ck - j * cd}, {0, cd}, {1, j * cd},
              {0, n1 - ck - cd}, {0, n - n1 - n2},
              {0, cd}, {1, j * fd}, {0, fd}, {1, fk - j * fd}}),
        n1, n2);
    f.parts.push_back(region_part("bilateral-" + std::to_string(j), prof, k,
                                  n - k, ck, delta, e3, q));
  }

  // second bilateral family: t-1 vectors, narrower shared region
  const long e6 = (n - k - 2 * delta + fd - cd) * (ck - delta + 1);
  for (long l = 1; l < t; ++l) {
    ProfileVector prof = make_profile(
        Flavor::bilateral,
        runs({{0, cd}, {1, ck - l * cd}, {0, cd}, {1, l * cd},
              {0, n1 - ck - 2 * cd}, {0, n - n1 - n2},
              {1, l * fd}, {0, fd}, {1, fk - l * fd}, {0, cd}}),
        n1, n2);
    f.parts.push_back(region_part("bilateral-narrow-" + std::to_string(l),
                                  prof, k, n - k, ck, delta, e6, q));
  }

  std::ostringstream os;
  os << "staircase + rank-restricted + " << t << "*q^" << e3 << " + "
     << (t - 1) << "*q^" << e6;
  f.size_text = os.str();
  return f;
}

}  // namespace cdc
