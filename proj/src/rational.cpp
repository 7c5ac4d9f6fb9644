#include "radix/rational.hpp"

#include <algorithm>
#include <map>

#include "radix/errors.hpp"

namespace radix {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::Parse: return "Parse";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::InvalidDescriptor: return "InvalidDescriptor";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotAField: return "NotAField";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::NotDisjoint: return "NotDisjoint";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotInL: return "NotInL";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NotEigenBasis: return "NotEigenBasis";
    case Errc::SingularLambda: return "SingularLambda";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::NotEigen: return "NotEigen";
    case Errc::Indeterminate: return "Indeterminate";
    case Errc::NotStronglyDisjoint: return "NotStronglyDisjoint";
    case Errc::NotMinimalExponent: return "NotMinimalExponent";
    case Errc::ComplementIntersects: return "ComplementIntersects";
    case Errc::NotCertified: return "NotCertified";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::NotProductStructure: return "NotProductStructure";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotInH: return "NotInH";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(Errc::Parse, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool parse_int(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') return false;
  std::string t(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(t, 10) == 0;
}

}  // namespace

BigRational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  BigInt num, den(1);
  bool ok = slash == std::string_view::npos
                ? parse_int(s, num)
                : parse_int(s.substr(0, slash), num) && parse_int(s.substr(slash + 1), den);
  if (!ok) throw Error(Errc::Parse, "not an exact rational: '" + std::string(s) + "'");
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(s) + "'");
  return make_rational(num, den);
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt mod_floor(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_prime(const BigInt& z) { return z > 1 && mpz_probab_prime_p(z.get_mpz_t(), 40) > 0; }

namespace {

BigInt pollard_brent(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 64;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          BigInt d = x - y;
          q = (q * abs(d)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(BigInt(abs(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(const BigInt& n, std::map<BigInt, unsigned>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  BigInt d = pollard_brent(n);
  factor_rec(d, acc);
  factor_rec(BigInt(n / d), acc);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& z) {
  if (z == 0) throw Error(Errc::Internal, "factorize(0)");
  BigInt n = abs(z);
  std::map<BigInt, unsigned> acc;
  for (unsigned long p = 2; p < 10000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++acc[BigInt(p)];
      n /= p;
    }
  }
  factor_rec(n, acc);
  return {acc.begin(), acc.end()};
}

bool is_squarefree(const BigInt& z) {
  for (auto& [p, e] : factorize(z))
    if (e > 1) return false;
  return true;
}

long valuation(const BigRational& q, const BigInt& p) {
  if (q == 0) throw Error(Errc::Internal, "valuation of zero");
  long v = 0;
  BigInt n = q.get_num(), d = q.get_den();
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) { n /= p; ++v; }
  while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) { d /= p; --v; }
  return v;
}

namespace {

bool int_root(const BigInt& a, unsigned k, BigInt& out) {
  if (a < 0) {
    if (k % 2 == 0) return false;
    BigInt r;
    if (!int_root(BigInt(-a), k, r)) return false;
    out = -r;
    return true;
  }
  BigInt r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
  if (!exact) return false;
  out = r;
  return true;
}

}  // namespace

bool rational_root(const BigRational& a, unsigned k, BigRational& out) {
  BigInt rn, rd;
  if (!int_root(a.get_num(), k, rn) || !int_root(a.get_den(), k, rd)) return false;
  out = make_rational(rn, rd);
  return true;
}

BigRational pow(const BigRational& q, long e) {
  if (e < 0) {
    if (q == 0) throw Error(Errc::NotInvertible, "0 to a negative power");
    return pow(BigRational(1) / q, -e);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(n, d);
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) {
  while (b) { a %= b; std::swap(a, b); }
  return a;
}

std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return a / gcd_u(a, b) * b; }

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto p : prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t x = a % m, k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

}  // namespace radix
