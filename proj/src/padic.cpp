#include "radix/padic.hpp"

#include <numeric>

#include "radix/errors.hpp"
#include "radix/splitting_algebra.hpp"

namespace radix {

PadicRadical make_padic(const BigInt& p, unsigned long n, const BigRational& a) {
  if (p < 2 || !is_prime(p)) throw Error(Errc::InvalidDescriptor, to_string(p) + " is not prime");
  if (n == 0 || a == 0) throw Error(Errc::InvalidDescriptor, "need n >= 1 and a != 0");
  if (!radical_irreducible(n, a))
    throw Error(Errc::InvalidDescriptor, "x^" + std::to_string(n) + " - " + to_string(a) + " is reducible over Q");
  return {p, n, a, valuation(a, p)};
}

std::optional<BigRational> normalize_eisenstein(const PadicRadical& x) {
  long n = static_cast<long>(x.n);
  if (std::gcd(x.v, n) != 1) return std::nullopt;
  long s = 0;
  for (long c = 0; c < n; ++c)
    if (((c * x.v) % n + n) % n == 1 % n) {
      s = c;
      break;
    }
  long t = (1 - s * x.v) / n;
  return pow(x.a, s) * pow(BigRational(x.p), t * n);
}

BigRational jump_bound(const BigInt& p, unsigned long e, unsigned long r) {
  return make_rational(BigInt(r) * p * BigInt(e), p - 1);
}

MaxRamifiedResult max_ramified_test(const PadicRadical& x) {
  if (BigInt(x.n) != x.p) throw Error(Errc::DegreeMismatch, "maximal ramification is tested in degree p only");
  MaxRamifiedResult r;
  r.witness = normalize_eisenstein(x);
  r.max_ramified = r.witness.has_value();
  return r;
}

RamificationReport ramification_classify(const PadicRadical& x) {
  RamificationReport rep;
  rep.tame = mod_floor(BigInt(x.n), x.p) != 0;
  rep.eisenstein = normalize_eisenstein(x);
  rep.totally_ramified = rep.eisenstein.has_value();
  bool degree_p = BigInt(x.n) == x.p;
  if (degree_p) {
    rep.r = x.p.get_ui() - 1;
    rep.jump_bound = jump_bound(x.p, 1, rep.r);
    rep.max_ramified = max_ramified_test(x).max_ramified;
  }
  rep.verdict = "undetermined";
  if (!rep.totally_ramified) {
    rep.reason = "no Eisenstein witness: gcd(v_p(a), n) = " + std::to_string(std::gcd(x.v, static_cast<long>(x.n)));
    return rep;
  }
  if (rep.tame) {
    // Totally ramified and tame, so L meets the unramified Q_p(zeta_n) trivially.
    rep.verdict = "free";
    rep.route = "tame_padic";
  } else if (degree_p) {
    rep.verdict = "free";
    rep.route = "max_ramified_padic";
  } else if (std::gcd(x.n, euler_phi(x.n)) == 1) {
    rep.verdict = "free";
    rep.route = "eisenstein_padic";
  } else {
    rep.reason = "wild, Eisenstein, but L meets Q_p(zeta_n) is not excluded";
  }
  return rep;
}

}  // namespace radix
