#pragma once

// Exact integers and rationals. Both are GMP-backed; mpq_class keeps its
// values canonical (positive denominator, reduced) as long as it is only built
// through the helpers below or arithmetic on canonical values.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace radix {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

// "p/q", or "p" when q = 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

// Accepts "p", "-p", "p/q". Throws Error(Parse) otherwise or when q = 0.
BigRational parse_rational(std::string_view s);

bool is_integer(const BigRational& q);
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& b);  // result in [0, |b|)
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Prime factorization of |z| (z != 0), ascending primes.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& z);
bool is_prime(const BigInt& z);
bool is_squarefree(const BigInt& z);

// Exponent of prime p in q (q != 0).
long valuation(const BigRational& q, const BigInt& p);

// Exact k-th root in Q if it exists (k >= 1).
bool rational_root(const BigRational& a, unsigned k, BigRational& out);

BigRational pow(const BigRational& q, long e);

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
// Multiplicative order of a modulo m (gcd(a,m)=1, m>=1).
std::uint64_t mult_order(std::uint64_t a, std::uint64_t m);

}  // namespace radix
