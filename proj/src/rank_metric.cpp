#include "cdcodes/rank_metric.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdc {

std::vector<long> index_digits(Int idx, long q, long len) {
  if (idx < 0) throw std::invalid_argument("index_digits: negative index");
  std::vector<long> d(len, 0);
  for (long i = 0; i < len && idx != 0; ++i) {
    d[i] = static_cast<long>(idx % q);
    idx /= q;
  }
  if (idx != 0) throw std::invalid_argument("index_digits: index out of range");
  return d;
}

namespace {

using Elem = ExtFieldSpec::Elem;
using LinPoly = std::vector<Elem>;  // coefficient i multiplies x^(q^i)

Elem eval_linpoly(const ExtFieldSpec& E, const LinPoly& f, const Elem& x) {
  Elem acc = E.zero();
  for (size_t i = 0; i < f.size(); ++i) {
    if (E.is_zero(f[i])) continue;
    acc = E.add(acc, E.mul(f[i], E.frobenius(x, static_cast<long>(i))));
  }
  return acc;
}

// (f o g)(x): q-degrees add, coefficients twist through the Frobenius
LinPoly compose(const ExtFieldSpec& E, const LinPoly& f, const LinPoly& g) {
  LinPoly r(f.size() + g.size() - 1, E.zero());
  for (size_t i = 0; i < f.size(); ++i) {
    if (E.is_zero(f[i])) continue;
    for (size_t j = 0; j < g.size(); ++j) {
      if (E.is_zero(g[j])) continue;
      r[i + j] = E.add(r[i + j],
                       E.mul(f[i], E.frobenius(g[j], static_cast<long>(i))));
    }
  }
  return r;
}

Elem random_elem(const ExtFieldSpec& E, long q, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(0, q - 1);
  Elem v(E.m, 0);
  for (long i = 0; i < E.m; ++i) v[i] = dist(rng);
  return v;
}

}  // namespace

MrdCode gabidulin(long q, long rows, long cols, long delta) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("gabidulin: empty shape");
  long nmin = std::min(rows, cols);
  if (delta < 1 || delta > nmin)
    throw std::invalid_argument("gabidulin: delta out of range");
  MrdCode c;
  c.q = q;
  c.rows = rows;
  c.cols = cols;
  c.delta = delta;
  c.M = std::max(rows, cols);
  c.K = nmin - delta + 1;
  c.kdim = c.M * c.K;
  c.base = field_new(q);
  c.ext = ext_field(c.base, c.M);
  return c;
}

Mat MrdCode::codeword_from_coeffs(const std::vector<Elem>& coeffs) const {
  const ExtFieldSpec& E = *ext;
  long nmin = std::min(rows, cols);
  Mat out(rows, cols, base);
  for (long j = 0; j < nmin; ++j) {
    Elem v = eval_linpoly(E, coeffs, E.gen(j));
    if (rows >= cols)
      for (long i = 0; i < rows; ++i) out.at(i, j) = v[i];
    else
      for (long i = 0; i < cols; ++i) out.at(j, i) = v[i];
  }
  return out;
}

Mat MrdCode::codeword(const std::vector<long>& digits) const {
  if (static_cast<long>(digits.size()) != kdim)
    throw std::invalid_argument("codeword: digit count mismatch");
  std::vector<Elem> coeffs(K);
  for (long i = 0; i < K; ++i)
    coeffs[i] = Elem(digits.begin() + i * M, digits.begin() + (i + 1) * M);
  return codeword_from_coeffs(coeffs);
}

Mat MrdCode::codeword(const Int& index) const {
  return codeword(index_digits(index, q, kdim));
}

std::vector<Mat> MrdCode::basis() const {
  std::vector<Mat> b;
  b.reserve(kdim);
  std::vector<long> digits(kdim, 0);
  for (long i = 0; i < kdim; ++i) {
    digits[i] = 1;
    b.push_back(codeword(digits));
    digits[i] = 0;
  }
  return b;
}

Mat LinearMatCode::member(const Int& index) const {
  std::vector<long> d = index_digits(index, q, dim());
  Mat out(rows, cols, field);
  const FieldSpec& F = *field;
  for (long i = 0; i < dim(); ++i) {
    if (d[i] == 0) continue;
    for (size_t c = 0; c < out.a.size(); ++c)
      out.a[c] = F.add(out.a[c], F.mul(d[i], basis[i].a[c]));
  }
  return out;
}

LinearMatCode to_linear(const MrdCode& c) {
  return LinearMatCode{c.q, c.rows, c.cols, c.base, c.basis()};
}

LinearMatCode support_constrained_subcode(const LinearMatCode& parent,
                                          const DotPattern& support) {
  if (support.m != parent.rows || support.n != parent.cols)
    throw std::invalid_argument("support_constrained_subcode: shape mismatch");
  const long dim = parent.dim();
  // one equation per off-support cell, one unknown per basis element
  std::vector<std::pair<long, long>> off;
  for (long r = 0; r < support.m; ++r)
    for (long c = 0; c < support.n; ++c)
      if (!support.has(r, c)) off.emplace_back(r, c);
  Mat sys(static_cast<long>(off.size()), dim, parent.field);
  for (size_t e = 0; e < off.size(); ++e)
    for (long i = 0; i < dim; ++i)
      sys.at(static_cast<long>(e), i) = parent.basis[i].at(off[e].first, off[e].second);
  // nullspace of sys gives the admissible coefficient combinations
  Mat rr = rref(sys);
  std::vector<long> piv;
  for (long r = 0; r < rr.rows; ++r) {
    long c = 0;
    while (c < dim && rr.at(r, c) == 0) ++c;
    if (c < dim) piv.push_back(c);
  }
  std::vector<bool> is_piv(dim, false);
  for (long c : piv) is_piv[c] = true;
  const FieldSpec& F = *parent.field;
  LinearMatCode sub{parent.q, parent.rows, parent.cols, parent.field, {}};
  for (long freec = 0; freec < dim; ++freec) {
    if (is_piv[freec]) continue;
    std::vector<long> x(dim, 0);
    x[freec] = 1;
    for (size_t pi = 0; pi < piv.size(); ++pi)
      x[piv[pi]] = F.neg(rr.at(static_cast<long>(pi), freec));
    Mat w(parent.rows, parent.cols, parent.field);
    for (long i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (size_t c = 0; c < w.a.size(); ++c)
        w.a[c] = F.add(w.a[c], F.mul(x[i], parent.basis[i].a[c]));
    }
    sub.basis.push_back(std::move(w));
  }
  return sub;
}

LinearMatCode truncate_code(const LinearMatCode& c, long dim) {
  if (dim < 0 || dim > c.dim())
    throw std::invalid_argument("truncate_code: dimension out of range");
  LinearMatCode t = c;
  t.basis.resize(dim);
  return t;
}

long min_rank_distance(const LinearMatCode& c, std::uint64_t budget) {
  Int total = c.size();
  if (total - 1 > Int(budget)) return -1;
  std::uint64_t n = static_cast<std::uint64_t>(total - 1);
  long best = -1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    long r = rank(c.member(Int(i)));
    if (best < 0 || r < best) best = r;
    if (best == 1) break;  // cannot get lower for a nonzero word
  }
  return best;
}

long min_rank_distance(const std::vector<Mat>& words) {
  long best = -1;
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j) {
      long r = rank(words[i] - words[j]);
      if (best < 0 || r < best) best = r;
    }
  return best;
}

CosetFamily coset_family(const MrdCode& parent, long sub_delta) {
  if (sub_delta <= parent.delta)
    throw std::invalid_argument("coset_family: subcode distance must grow");
  long nmin = std::min(parent.rows, parent.cols);
  if (sub_delta > nmin + 1)
    throw std::invalid_argument("coset_family: subcode distance too large");
  CosetFamily f;
  f.parent = parent;
  f.sub_delta = sub_delta;
  f.sub_K = nmin - sub_delta + 1;
  return f;
}

std::vector<long> CosetFamily::rep_digits(const Int& coset) const {
  long top = parent.M * (parent.K - sub_K);
  std::vector<long> hi = index_digits(coset, parent.q, top);
  std::vector<long> d(parent.kdim, 0);
  std::copy(hi.begin(), hi.end(), d.begin() + parent.M * sub_K);
  return d;
}

Mat CosetFamily::rep(const Int& coset) const {
  return parent.codeword(rep_digits(coset));
}

Mat CosetFamily::member(const Int& coset, const Int& inner) const {
  std::vector<long> d = rep_digits(coset);
  std::vector<long> lo = index_digits(inner, parent.q, parent.M * sub_K);
  std::copy(lo.begin(), lo.end(), d.begin());
  return parent.codeword(d);
}

std::vector<Mat> grmc_from_cosets(const MrdCode& parent, long sub_delta,
                                  long max_rank) {
  CosetFamily fam = coset_family(parent, sub_delta);
  Int ncosets = fam.count();
  Int inner = fam.coset_size();
  if (ncosets > 1 << 20 || inner > 1 << 20)
    throw std::invalid_argument("grmc_from_cosets: enumeration too large");
  std::vector<Mat> best;
  for (Int c = 0; c < ncosets; ++c) {
    std::vector<Mat> words;
    for (Int j = 0; j < inner; ++j) {
      Mat w = fam.member(c, j);
      if (rank(w) <= max_rank) words.push_back(std::move(w));
    }
    if (words.size() > best.size()) best = std::move(words);
  }
  return best;
}

Mat sample_codeword(const MrdCode& c, std::mt19937_64& rng) {
  std::vector<Elem> coeffs(c.K);
  for (long i = 0; i < c.K; ++i) coeffs[i] = random_elem(*c.ext, c.q, rng);
  return c.codeword_from_coeffs(coeffs);
}

Mat sample_low_rank(const MrdCode& c, long max_rank, std::mt19937_64& rng) {
  long nmin = std::min(c.rows, c.cols);
  if (max_rank >= nmin) return sample_codeword(c, rng);
  long drop = nmin - max_rank;  // dimension to annihilate
  if (c.K <= drop)
    throw std::invalid_argument("sample_low_rank: rank bound below reach");
  const ExtFieldSpec& E = *c.ext;
  std::uniform_int_distribution<long> dist(0, c.q - 1);
  // annihilator of a random drop-dim subspace of the evaluation-point span
  LinPoly ann(1, E.one());
  long killed = 0;
  while (killed < drop) {
    Elem v = E.zero();
    for (long j = 0; j < nmin; ++j) {
      long coef = dist(rng);
      if (coef) v = E.add(v, E.scale(coef, E.gen(j)));
    }
    Elem a = eval_linpoly(E, ann, v);
    if (E.is_zero(a)) continue;  // already annihilated; resample
    // ann'(x) = ann(x)^q - a^(q-1) ann(x)
    Elem s = E.mul(E.frobenius(a, 1), E.inv(a));
    LinPoly next(ann.size() + 1, E.zero());
    for (size_t i = 0; i < ann.size(); ++i) {
      next[i + 1] = E.add(next[i + 1], E.frobenius(ann[i], 1));
      next[i] = E.sub(next[i], E.mul(s, ann[i]));
    }
    ann = std::move(next);
    ++killed;
  }
  LinPoly g(c.K - drop);
  for (auto& gc : g) gc = random_elem(E, c.q, rng);
  LinPoly f = compose(E, g, ann);
  f.resize(c.K, E.zero());
  return c.codeword_from_coeffs(f);
}

}  // namespace cdc
