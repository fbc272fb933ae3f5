#include "cdcodes/gf.hpp"

#include <algorithm>

namespace cdc {

namespace {

// ---- polynomials over the prime field GF(p), coefficients as ints -------

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long pdeg(const Poly& a) { return static_cast<long>(a.size()) - 1; }

// remainder of a by monic b, arithmetic mod p
Poly pmod_prime(Poly a, const Poly& b, long p) {
  ptrim(a);
  long db = pdeg(b);
  while (pdeg(a) >= db) {
    long lead = a.back();
    long shift = pdeg(a) - db;
    for (long i = 0; i <= db; ++i) {
      long& c = a[shift + i];
      c = (c - lead * b[i]) % p;
      if (c < 0) c += p;
    }
    ptrim(a);
  }
  return a;
}

Poly pmul_prime(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  ptrim(r);
  return r;
}

bool irreducible_prime(const Poly& f, long p) {
  // trial division by every monic polynomial of degree 1..deg/2
  long df = pdeg(f);
  for (long d = 1; 2 * d <= df; ++d) {
    long count = 1;
    for (long i = 0; i < d; ++i) count *= p;
    for (long c = 0; c < count; ++c) {
      Poly g(d + 1, 0);
      g[d] = 1;
      long t = c;
      for (long i = 0; i < d; ++i) {
        g[i] = t % p;
        t /= p;
      }
      if (pmod_prime(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime_power(long q, long* p_out, long* e_out) {
  if (q < 2) return false;
  long n = q;
  long p = 0;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = n;  // q itself is prime
  long e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return false;
  if (p_out) *p_out = p;
  if (e_out) *e_out = e;
  return true;
}

// ---- FieldSpec ----------------------------------------------------------

std::vector<long> FieldSpec::to_digits(long a) const {
  std::vector<long> d(e, 0);
  for (long i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

long FieldSpec::from_digits(const std::vector<long>& d) const {
  long a = 0;
  for (long i = e - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

long FieldSpec::add(long a, long b) const {
  if (e == 1) return (a + b) % p;
  auto da = to_digits(a), db = to_digits(b);
  for (long i = 0; i < e; ++i) da[i] = (da[i] + db[i]) % p;
  return from_digits(da);
}

long FieldSpec::neg(long a) const {
  if (e == 1) return (p - a) % p;
  auto d = to_digits(a);
  for (auto& c : d) c = (p - c) % p;
  return from_digits(d);
}

long FieldSpec::sub(long a, long b) const { return add(a, neg(b)); }

long FieldSpec::mul_slow(long a, long b) const {
  if (e == 1) return (a * b) % p;
  auto da = to_digits(a), db = to_digits(b);
  Poly pa(da.begin(), da.end()), pb(db.begin(), db.end());
  Poly mod(modulus.begin(), modulus.end());
  Poly r = pmod_prime(pmul_prime(pa, pb, p), mod, p);
  r.resize(e, 0);
  return from_digits(std::vector<long>(r.begin(), r.end()));
}

long FieldSpec::mul(long a, long b) const {
  if (!mul_table_.empty()) return mul_table_[a * q + b];
  return mul_slow(a, b);
}

long FieldSpec::inv(long a) const {
  if (a == 0) throw std::domain_error("FieldSpec::inv(0)");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q - 2);
}

long FieldSpec::pow(long a, long long n) const {
  long long m = n % (q - 1);
  if (m < 0) m += q - 1;
  if (a == 0) return n == 0 ? 1 : 0;
  long r = 1, b = a;
  while (m) {
    if (m & 1) r = mul(r, b);
    b = mul(b, b);
    m >>= 1;
  }
  return r;
}

Field field_new(long q) {
  long p = 0, e = 0;
  if (!is_prime_power(q, &p, &e))
    throw std::invalid_argument("field_new: " + std::to_string(q) +
                                " is not a prime power");
  auto f = std::make_shared<FieldSpec>();
  f->p = p;
  f->e = e;
  f->q = q;
  if (e == 1) {
    f->modulus = {0, 1};  // x, by convention
  } else {
    // smallest candidate by the base-p integer of the low coefficients
    bool found = false;
    for (long c = 0; c < q && !found; ++c) {
      Poly cand(e + 1, 0);
      cand[e] = 1;
      long t = c;
      for (long i = 0; i < e; ++i) {
        cand[i] = t % p;
        t /= p;
      }
      if (irreducible_prime(cand, p)) {
        f->modulus.assign(cand.begin(), cand.end());
        found = true;
      }
    }
    if (!found) throw std::logic_error("field_new: no irreducible found");
  }
  if (q <= 256) {
    f->mul_table_.resize(q * q);
    for (long a = 0; a < q; ++a)
      for (long b = 0; b < q; ++b) f->mul_table_[a * q + b] = f->mul_slow(a, b);
    f->inv_table_.resize(q, 0);
    for (long a = 1; a < q; ++a) {
      for (long b = 1; b < q; ++b) {
        if (f->mul_table_[a * q + b] == 1) {
          f->inv_table_[a] = b;
          break;
        }
      }
    }
  }
  return f;
}

// ---- polynomials over an arbitrary base field ---------------------------

namespace {

void ftrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly fmul(const FieldSpec& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  ftrim(r);
  return r;
}

// remainder by a monic divisor
Poly fmod(const FieldSpec& F, Poly a, const Poly& b) {
  ftrim(a);
  long db = pdeg(b);
  while (pdeg(a) >= db) {
    long lead = a.back();
    long shift = pdeg(a) - db;
    for (long i = 0; i <= db; ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(lead, b[i]));
    ftrim(a);
  }
  return a;
}

Poly fmulmod(const FieldSpec& F, const Poly& a, const Poly& b, const Poly& mod) {
  return fmod(F, fmul(F, a, b), mod);
}

// a^n mod `mod` for n >= 0
Poly fpowmod(const FieldSpec& F, Poly a, long long n, const Poly& mod) {
  Poly r{1};
  a = fmod(F, a, mod);
  while (n) {
    if (n & 1) r = fmulmod(F, r, a, mod);
    a = fmulmod(F, a, a, mod);
    n >>= 1;
  }
  return r;
}

Poly fmonic(const FieldSpec& F, Poly a) {
  ftrim(a);
  if (a.empty()) return a;
  long c = F.inv(a.back());
  for (auto& x : a) x = F.mul(x, c);
  return a;
}

Poly fgcd(const FieldSpec& F, Poly a, Poly b) {
  ftrim(a);
  ftrim(b);
  while (!b.empty()) {
    Poly r = fmod(F, a, fmonic(F, b));
    a = b;
    b = r;
  }
  return fmonic(F, a);
}

// Rabin's test: f (monic, degree m) is irreducible over GF(q) iff
// x^(q^m) == x (mod f) and gcd(x^(q^(m/r)) - x, f) = 1 for prime r | m
bool irreducible_ext(const FieldSpec& F, const Poly& f) {
  long m = pdeg(f);
  long q = F.q;
  // frob_pows[j] = x^(q^j) mod f
  std::vector<Poly> fp(m + 1);
  fp[0] = Poly{0, 1};
  for (long j = 1; j <= m; ++j) fp[j] = fpowmod(F, fp[j - 1], q, f);
  Poly x{0, 1};
  Poly diff = fp[m];
  // fp[m] - x
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = F.sub(diff[1], 1);
  ftrim(diff);
  if (!diff.empty()) return false;
  for (long r = 2; r <= m; ++r) {
    if (m % r != 0) continue;
    bool rprime = true;
    for (long s = 2; s * s <= r; ++s)
      if (r % s == 0) rprime = false;
    if (!rprime) continue;
    Poly g = fp[m / r];
    if (g.size() < 2) g.resize(2, 0);
    g[1] = F.sub(g[1], 1);
    Poly gg = fgcd(F, g, f);
    if (pdeg(gg) != 0) return false;
  }
  return true;
}

}  // namespace

// ---- ExtFieldSpec -------------------------------------------------------

ExtFieldSpec::Elem ExtFieldSpec::one() const {
  Elem a(m, 0);
  a[0] = 1;
  return a;
}

ExtFieldSpec::Elem ExtFieldSpec::gen(long i) const {
  if (i < 0 || i >= m) throw std::invalid_argument("ExtFieldSpec::gen");
  Elem a(m, 0);
  a[i] = 1;
  return a;
}

bool ExtFieldSpec::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](long c) { return c == 0; });
}

ExtFieldSpec::Elem ExtFieldSpec::add(const Elem& a, const Elem& b) const {
  Elem r(m);
  for (long i = 0; i < m; ++i) r[i] = base->add(a[i], b[i]);
  return r;
}

ExtFieldSpec::Elem ExtFieldSpec::sub(const Elem& a, const Elem& b) const {
  Elem r(m);
  for (long i = 0; i < m; ++i) r[i] = base->sub(a[i], b[i]);
  return r;
}

ExtFieldSpec::Elem ExtFieldSpec::scale(long c, const Elem& a) const {
  Elem r(m);
  for (long i = 0; i < m; ++i) r[i] = base->mul(c, a[i]);
  return r;
}

ExtFieldSpec::Elem ExtFieldSpec::mul(const Elem& a, const Elem& b) const {
  Poly pa(a.begin(), a.end()), pb(b.begin(), b.end());
  Poly r = fmulmod(*base, pa, pb, modulus);
  r.resize(m, 0);
  return r;
}

ExtFieldSpec::Elem ExtFieldSpec::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("ExtFieldSpec::inv(0)");
  // extended Euclid: s*a + t*modulus = gcd = 1
  Poly r0 = modulus, r1(a.begin(), a.end());
  ftrim(r1);
  Poly s0{}, s1{1};
  const FieldSpec& F = *base;
  while (!r1.empty()) {
    // quotient of r0 by r1
    Poly q{};
    Poly rem = r0;
    ftrim(rem);
    long d1 = pdeg(r1);
    long ilead = F.inv(r1.back());
    while (pdeg(rem) >= d1) {
      long shift = pdeg(rem) - d1;
      long c = F.mul(rem.back(), ilead);
      if (static_cast<long>(q.size()) <= shift) q.resize(shift + 1, 0);
      q[shift] = F.add(q[shift], c);
      for (long i = 0; i <= d1; ++i)
        rem[shift + i] = F.sub(rem[shift + i], F.mul(c, r1[i]));
      ftrim(rem);
    }
    Poly s2 = s0;
    Poly qs = fmul(F, q, s1);
    if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
    for (size_t i = 0; i < qs.size(); ++i) s2[i] = F.sub(s2[i], qs[i]);
    ftrim(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 = gcd (degree 0 since a != 0 and modulus irreducible)
  long c = F.inv(r0[0]);
  Poly res = s0;
  for (auto& x : res) x = F.mul(x, c);
  res.resize(m, 0);
  return res;
}

ExtFieldSpec::Elem ExtFieldSpec::frobenius(const Elem& a, long i) const {
  long steps = ((i % m) + m) % m;
  Elem r = a;
  for (long s = 0; s < steps; ++s) {
    Elem nr(m, 0);
    // frob_ is m x m, column j = (x^q)^j coefficients
    for (long j = 0; j < m; ++j) {
      if (r[j] == 0) continue;
      for (long row = 0; row < m; ++row)
        nr[row] = base->add(nr[row], base->mul(r[j], frob_[row * m + j]));
    }
    r = nr;
  }
  return r;
}

ExtFieldSpec::Elem ExtFieldSpec::from_vector(const std::vector<long>& v) const {
  if (static_cast<long>(v.size()) != m)
    throw std::invalid_argument("ExtFieldSpec::from_vector: length mismatch");
  return v;
}

ExtField ext_field(Field base, long m) {
  if (m < 1) throw std::invalid_argument("ext_field: m >= 1 required");
  auto E = std::make_shared<ExtFieldSpec>();
  E->base = base;
  E->m = m;
  if (m == 1) {
    E->modulus = {0, 1};
  } else {
    bool found = false;
    // candidate low coefficients enumerated as base-q digits of c
    // (upper bound q^m is correct but never reached: an irreducible of every
    // degree exists with small low coefficients)
    for (long long c = 0;; ++c) {
      Poly cand(m + 1, 0);
      cand[m] = 1;
      long long t = c;
      for (long i = 0; i < m && t; ++i) {
        cand[i] = t % base->q;
        t /= base->q;
      }
      if (t) throw std::logic_error("ext_field: no irreducible found");
      if (irreducible_ext(*base, cand)) {
        E->modulus = cand;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("ext_field: no irreducible found");
  }
  // q-power map on the polynomial basis
  E->frob_.assign(m * m, 0);
  Poly xq = fpowmod(*base, Poly{0, 1}, base->q, E->modulus);
  Poly pw{1};
  for (long j = 0; j < m; ++j) {
    for (long row = 0; row < static_cast<long>(pw.size()); ++row)
      E->frob_[row * m + j] = pw[row];
    pw = fmulmod(*base, pw, xq, E->modulus);
  }
  return E;
}

}  // namespace cdc
