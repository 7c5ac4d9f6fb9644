#include "radix/qpoly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "radix/errors.hpp"

namespace radix {

QPoly::QPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const BigRational& c) { return QPoly(std::vector<BigRational>{c}); }

QPoly QPoly::x_pow(std::size_t k, const BigRational& c) {
  std::vector<BigRational> v(k + 1);
  v[k] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  BigRational inv = 1 / leading();
  std::vector<BigRational> v(c_);
  for (auto& x : v) x *= inv;
  return QPoly(std::move(v));
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRational> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return QPoly(std::move(v));
}

BigRational QPoly::eval(const BigRational& x) const {
  BigRational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<BigRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<BigRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
  return QPoly(std::move(v));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly operator*(const BigRational& s, const QPoly& a) {
  std::vector<BigRational> v(a.c_);
  for (auto& x : v) x *= s;
  return QPoly(std::move(v));
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const BigRational& c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (!unit || k == 0) out += radix::to_string(mag);
    if (k >= 1) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(Errc::Internal, "polynomial division by zero");
  std::vector<BigRational> r(a.coeffs());
  long db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<BigRational> q(static_cast<std::size_t>(a.degree() - db + 1));
  BigRational inv = 1 / b.leading();
  for (long k = a.degree(); k >= db; --k) {
    BigRational c = r[static_cast<std::size_t>(k)] * inv;
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

QPoly cyclotomic(unsigned n) {
  if (n == 0) throw Error(Errc::Internal, "cyclotomic(0)");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  QPoly f = QPoly::x_pow(n) - QPoly::constant(1);
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) f = divmod(f, cyclotomic(d)).first;
  return f;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = 0; k < a.coeffs().size(); ++k)
    if (a.coeffs()[k] != b.coeffs()[k]) return a.coeffs()[k] < b.coeffs()[k];
  return false;
}

// ---------------------------------------------------------------------------
// Factorization over Z via a small prime, Hensel lifting and recombination.

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;  // ascending, trimmed
using ZPoly = std::vector<BigInt>;

void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long mp_deg(const ModPoly& a) { return static_cast<long>(a.size()) - 1; }

u64 inv_mod(u64 a, u64 p) {
  u64 r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) {
    u64 x = k < a.size() ? a[k] : 0, y = k < b.size() ? b[k] : 0;
    r[k] = (x + p - y) % p;
  }
  mp_trim(r);
  return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mp_trim(r);
  return r;
}

void mp_divmod(const ModPoly& a, const ModPoly& b, u64 p, ModPoly* q, ModPoly* r) {
  ModPoly rem(a);
  long db = mp_deg(b);
  ModPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  u64 inv = inv_mod(b.back(), p);
  for (long k = mp_deg(rem); k >= db; --k) {
    u64 c = rem[static_cast<std::size_t>(k)] * inv % p;
    if (!c) continue;
    quo[static_cast<std::size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(k - db + j);
      rem[idx] = (rem[idx] + p - c * b[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  mp_trim(rem);
  mp_trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

ModPoly mp_rem(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r;
  mp_divmod(a, b, p, nullptr, &r);
  return r;
}

ModPoly mp_monic(ModPoly a, u64 p) {
  if (a.empty()) return a;
  u64 inv = inv_mod(a.back(), p);
  for (auto& x : a) x = x * inv % p;
  return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

// s*a + t*b = 1 mod p, for coprime a, b.
void mp_ext_gcd(const ModPoly& a, const ModPoly& b, u64 p, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    mp_divmod(r0, r1, p, &q, &r);
    ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (r0.size() != 1) throw Error(Errc::Internal, "Hensel factors not coprime");
  u64 inv = inv_mod(r0[0], p);
  s = s0; t = t0;
  for (auto& x : s) x = x * inv % p;
  for (auto& x : t) x = x * inv % p;
}

ModPoly mp_powmod(ModPoly base, const BigInt& e, const ModPoly& f, u64 p) {
  ModPoly r{1};
  base = mp_rem(base, f, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mp_rem(mp_mul(r, r, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_rem(mp_mul(r, base, p), f, p);
  }
  return r;
}

ModPoly mp_deriv(const ModPoly& a, u64 p) {
  ModPoly r;
  for (std::size_t k = 1; k < a.size(); ++k) r.push_back(a[k] * (k % p) % p);
  mp_trim(r);
  return r;
}

ModPoly to_mod(const ZPoly& f, u64 p) {
  ModPoly r(f.size());
  BigInt pp(static_cast<unsigned long>(p));
  for (std::size_t k = 0; k < f.size(); ++k) r[k] = mod_floor(f[k], pp).get_ui();
  mp_trim(r);
  return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, unsigned>> mp_ddf(ModPoly f, u64 p) {
  std::vector<std::pair<ModPoly, unsigned>> out;
  ModPoly x{0, 1}, h = x;
  BigInt pp(static_cast<unsigned long>(p));
  for (unsigned d = 1; 2 * static_cast<long>(d) <= mp_deg(f); ++d) {
    h = mp_powmod(h, pp, f, p);
    ModPoly g = mp_gcd(f, mp_sub(h, x, p), p);
    if (mp_deg(g) > 0) {
      out.emplace_back(g, d);
      ModPoly q;
      mp_divmod(f, g, p, &q, nullptr);
      f = q;
      h = mp_rem(h, f, p);
    }
  }
  if (mp_deg(f) > 0) out.emplace_back(f, static_cast<unsigned>(mp_deg(f)));
  return out;
}

void mp_edf(const ModPoly& g, unsigned d, u64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (mp_deg(g) == static_cast<long>(d)) {
    out.push_back(g);
    return;
  }
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  for (;;) {
    ModPoly a(static_cast<std::size_t>(mp_deg(g)));
    for (auto& x : a) x = rng() % p;
    mp_trim(a);
    if (mp_deg(a) < 1) continue;
    ModPoly b = mp_sub(mp_powmod(a, e, g, p), ModPoly{1}, p);
    ModPoly u = mp_gcd(g, b, p);
    if (mp_deg(u) > 0 && mp_deg(u) < mp_deg(g)) {
      ModPoly q;
      mp_divmod(g, u, p, &q, nullptr);
      mp_edf(u, d, p, rng, out);
      mp_edf(mp_monic(q, p), d, p, rng, out);
      return;
    }
  }
}

// --- integer polynomials modulo m ---

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_mod(ZPoly a, const BigInt& m) {
  for (auto& x : a) x = mod_floor(x, m);
  zp_trim(a);
  return a;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = (k < a.size() ? a[k] : BigInt(0)) + (k < b.size() ? b[k] : BigInt(0));
  return zp_mod(std::move(r), m);
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = (k < a.size() ? a[k] : BigInt(0)) - (k < b.size() ? b[k] : BigInt(0));
  return zp_mod(std::move(r), m);
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return zp_mod(std::move(r), m);
}

// Division by a monic divisor modulo m.
void zp_divmod_monic(const ZPoly& a, const ZPoly& b, const BigInt& m, ZPoly& q, ZPoly& r) {
  r = zp_mod(a, m);
  long db = static_cast<long>(b.size()) - 1;
  long da = static_cast<long>(r.size()) - 1;
  q.assign(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, BigInt(0));
  for (long k = da; k >= db; --k) {
    BigInt c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] = mod_floor(r[static_cast<std::size_t>(k - db + j)], m);
  }
  zp_trim(r);
  q = zp_mod(q, m);
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = BigInt(static_cast<unsigned long>(a[k]));
  return r;
}

// One quadratic Hensel step (f = g*h mod m, s*g + t*h = 1 mod m, h monic).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const BigInt& m2) {
  ZPoly e = zp_sub(f, zp_mul(g, h, m2), m2);
  ZPoly q, r;
  zp_divmod_monic(zp_mul(s, e, m2), h, m2, q, r);
  ZPoly g2 = zp_add(zp_add(g, zp_mul(t, e, m2), m2), zp_mul(q, g, m2), m2);
  ZPoly h2 = zp_add(h, r, m2);
  ZPoly b = zp_sub(zp_add(zp_mul(s, g2, m2), zp_mul(t, h2, m2), m2), ZPoly{BigInt(1)}, m2);
  ZPoly c, d;
  zp_divmod_monic(zp_mul(s, b, m2), h2, m2, c, d);
  s = zp_sub(s, d, m2);
  t = zp_sub(zp_sub(t, zp_mul(t, b, m2), m2), zp_mul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lift monic factors mod p of f (f = lc * prod mod p) to monic factors mod P = p^k.
std::vector<ZPoly> multi_lift(const ZPoly& f, const std::vector<ModPoly>& fac, u64 p, const BigInt& P) {
  BigInt pp(static_cast<unsigned long>(p));
  if (fac.size() == 1) {
    BigInt inv;
    BigInt lc = mod_floor(f.back(), P);
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), P.get_mpz_t());
    ZPoly r = f;
    for (auto& x : r) x = mod_floor(BigInt(x * inv), P);
    zp_trim(r);
    return {r};
  }
  std::size_t half = fac.size() / 2;
  std::vector<ModPoly> f1(fac.begin(), fac.begin() + static_cast<long>(half));
  std::vector<ModPoly> f2(fac.begin() + static_cast<long>(half), fac.end());
  ModPoly g0 = to_mod(ZPoly{f.back()}, p), h0{1};
  for (auto& x : f1) g0 = mp_mul(g0, x, p);
  for (auto& x : f2) h0 = mp_mul(h0, x, p);
  ModPoly s0, t0;
  mp_ext_gcd(g0, h0, p, s0, t0);
  ZPoly g = from_mod(g0), h = from_mod(h0), s = from_mod(s0), t = from_mod(t0);
  BigInt m = pp;
  while (m < P) {
    m = m * m;
    hensel_step(zp_mod(f, m), g, h, s, t, m);
  }
  g = zp_mod(g, P);
  h = zp_mod(h, P);
  auto a = multi_lift(g, f1, p, P);
  auto b = multi_lift(h, f2, p, P);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ZPoly symmetric(ZPoly a, const BigInt& P) {
  BigInt half = P / 2;
  for (auto& x : a) {
    x = mod_floor(x, P);
    if (x > half) x -= P;
  }
  zp_trim(a);
  return a;
}

BigInt zp_content(const ZPoly& a) {
  BigInt g = 0;
  for (auto& x : a) g = gcd(g, x);
  return g;
}

ZPoly primitive_part(ZPoly a) {
  BigInt c = zp_content(a);
  if (c == 0) return a;
  if (a.back() < 0) c = -c;
  for (auto& x : a) x /= c;
  return a;
}

// Exact division over Z; returns false when b does not divide a.
bool zp_exact_div(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  ZPoly r = a;
  long db = static_cast<long>(b.size()) - 1, da = static_cast<long>(a.size()) - 1;
  if (da < db) return false;
  q.assign(static_cast<std::size_t>(da - db + 1), BigInt(0));
  for (long k = da; k >= db; --k) {
    BigInt& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
    BigInt c = top / b.back();
    q[static_cast<std::size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b[static_cast<std::size_t>(j)];
  }
  for (auto& x : r)
    if (x != 0) return false;
  zp_trim(q);
  return true;
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> ps = [] {
    std::vector<u64> v;
    std::vector<bool> sieve(20000, true);
    for (u64 i = 2; i < sieve.size(); ++i) {
      if (!sieve[i]) continue;
      v.push_back(i);
      for (u64 j = i * i; j < sieve.size(); j += i) sieve[j] = false;
    }
    return v;
  }();
  return ps;
}

std::set<long> subset_sums(const std::vector<long>& degs) {
  std::set<long> s{0};
  for (long d : degs) {
    std::set<long> t = s;
    for (long x : s) t.insert(x + d);
    s = std::move(t);
  }
  return s;
}

// Factor a primitive squarefree integer polynomial with positive leading coefficient.
std::vector<ZPoly> factor_squarefree_z(ZPoly h) {
  long n = static_cast<long>(h.size()) - 1;
  if (n <= 1) return {h};
  if (h[0] == 0) {
    ZPoly rest(h.begin() + 1, h.end());
    auto fs = factor_squarefree_z(rest);
    fs.push_back(ZPoly{BigInt(0), BigInt(1)});
    return fs;
  }

  // Collect good primes and their degree patterns.
  std::vector<std::pair<u64, std::vector<std::pair<ModPoly, unsigned>>>> good;
  std::set<long> allowed;
  bool first = true;
  for (u64 p : small_primes()) {
    if (p == 2) continue;
    if (mpz_divisible_ui_p(h.back().get_mpz_t(), p)) continue;
    ModPoly hp = mp_monic(to_mod(h, p), p);
    if (mp_deg(mp_gcd(hp, mp_deriv(hp, p), p)) != 0) continue;
    auto ddf = mp_ddf(hp, p);
    std::vector<long> degs;
    for (auto& [g, d] : ddf)
      for (long k = 0; k < mp_deg(g) / static_cast<long>(d); ++k) degs.push_back(d);
    auto sums = subset_sums(degs);
    if (first) {
      allowed = sums;
      first = false;
    } else {
      std::set<long> inter;
      std::set_intersection(allowed.begin(), allowed.end(), sums.begin(), sums.end(),
                            std::inserter(inter, inter.begin()));
      allowed = std::move(inter);
    }
    good.emplace_back(p, std::move(ddf));
    if (good.size() >= 7) break;
  }
  if (good.empty()) throw Error(Errc::Internal, "no good prime for factorization");
  // Only 0 and n reachable: irreducible.
  if (allowed.size() == 2) return {h};

  std::size_t best = 0, best_count = SIZE_MAX;
  for (std::size_t i = 0; i < good.size(); ++i) {
    std::size_t cnt = 0;
    for (auto& [g, d] : good[i].second) cnt += static_cast<std::size_t>(mp_deg(g)) / d;
    if (cnt < best_count) { best_count = cnt; best = i; }
  }
  u64 p = good[best].first;
  std::mt19937_64 rng(0x5eed0000ULL + p);
  std::vector<ModPoly> modfac;
  for (auto& [g, d] : good[best].second) mp_edf(g, d, p, rng, modfac);
  if (modfac.size() == 1) return {h};

  // Coefficient bound for factors: 2^n * ||h||_2 * |lc|.
  BigInt norm2 = 0;
  for (auto& c : h) norm2 += c * c;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  BigInt bound = (root + 1) * abs(h.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n) + 1);
  BigInt P = static_cast<unsigned long>(p);
  while (P <= bound) P *= static_cast<unsigned long>(p);

  std::vector<ZPoly> lifted = multi_lift(h, modfac, p, P);

  std::vector<ZPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      long deg = 0;
      for (auto i : idx) deg += static_cast<long>(lifted[remaining[i]].size()) - 1;
      if (allowed.count(deg)) {
        BigInt lc = h.back();
        // constant-term filter
        BigInt c0 = lc;
        for (auto i : idx) c0 = mod_floor(BigInt(c0 * lifted[remaining[i]][0]), P);
        if (c0 > P / 2) c0 -= P;
        BigInt h0 = lc * h[0];
        if (c0 != 0 && mpz_divisible_p(h0.get_mpz_t(), c0.get_mpz_t())) {
          ZPoly cand{lc};
          for (auto i : idx) cand = zp_mul(cand, lifted[remaining[i]], P);
          cand = primitive_part(symmetric(cand, P));
          ZPoly q;
          if (zp_exact_div(h, cand, q)) {
            result.push_back(cand);
            h = primitive_part(q);
            std::vector<std::size_t> rest;
            for (std::size_t i = 0; i < remaining.size(); ++i)
              if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(remaining[i]);
            remaining = std::move(rest);
            found = true;
            break;
          }
        }
      }
      // next combination
      long k = static_cast<long>(s) - 1;
      while (k >= 0 && idx[static_cast<std::size_t>(k)] == remaining.size() - s + static_cast<std::size_t>(k)) --k;
      if (k < 0) break;
      ++idx[static_cast<std::size_t>(k)];
      for (std::size_t j = static_cast<std::size_t>(k) + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (h.size() > 1) result.push_back(h);
  return result;
}

ZPoly to_primitive_z(const QPoly& f) {
  BigInt den = 1;
  for (auto& c : f.coeffs()) den = lcm(den, c.get_den());
  ZPoly z(f.coeffs().size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    BigRational v = f.coeffs()[k] * den;
    z[k] = v.get_num();
  }
  return primitive_part(z);
}

QPoly to_monic_q(const ZPoly& z) {
  std::vector<BigRational> v(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) v[k] = BigRational(z[k]);
  return QPoly(std::move(v)).monic();
}

bool squarefree_mod_some_prime(const ZPoly& z) {
  for (u64 p : small_primes()) {
    if (p > 200) break;
    if (mpz_divisible_ui_p(z.back().get_mpz_t(), p)) continue;
    ModPoly hp = mp_monic(to_mod(z, p), p);
    if (mp_deg(mp_gcd(hp, mp_deriv(hp, p), p)) == 0) return true;
  }
  return false;
}

}  // namespace

std::vector<std::pair<QPoly, unsigned>> poly_factor(const QPoly& f) {
  if (f.is_zero()) throw Error(Errc::Internal, "poly_factor of zero");
  std::vector<std::pair<QPoly, unsigned>> parts;
  if (f.degree() == 0) return {};
  if (squarefree_mod_some_prime(to_primitive_z(f))) {
    parts.emplace_back(f.monic(), 1);
  } else {
    // Yun's squarefree decomposition.
    QPoly fm = f.monic(), d1 = fm.derivative();
    QPoly b = poly_gcd(fm, d1);
    QPoly c = divmod(fm, b).first;
    QPoly d = divmod(d1, b).first - c.derivative();
    unsigned i = 1;
    while (c.degree() > 0) {
      QPoly a = poly_gcd(c, d);
      if (a.degree() > 0) parts.emplace_back(a, i);
      c = divmod(c, a).first;
      d = divmod(d, a).first - c.derivative();
      ++i;
    }
  }
  std::vector<std::pair<QPoly, unsigned>> out;
  for (auto& [g, mult] : parts)
    for (auto& z : factor_squarefree_z(to_primitive_z(g))) out.emplace_back(to_monic_q(z), mult);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

}  // namespace radix
