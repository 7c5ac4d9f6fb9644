#include <doctest.h>

#include <numeric>

#include "radix/errors.hpp"
#include "radix/padic.hpp"
#include "radix/splitting_algebra.hpp"
#include "support.hpp"

using namespace radix;
using namespace testing_support;

TEST_CASE("eisenstein normalization") {
  CHECK(*normalize_eisenstein(make_padic(3, 3, 9)) == 3);
  CHECK(*normalize_eisenstein(make_padic(3, 3, 3)) == 3);
  CHECK(!normalize_eisenstein(make_padic(3, 3, 2)));
  CHECK(*normalize_eisenstein(make_padic(2, 5, make_rational(1, 8))) == 2);
}

TEST_CASE("normalized radicands have valuation one and the same class") {
  std::mt19937_64 g(123);
  static const long primes[] = {2, 3, 5, 7};
  int done = 0;
  while (done < 200) {
    long p = primes[rand_int(g, 0, 3)];
    unsigned long n = static_cast<unsigned long>(rand_int(g, 2, 7));
    BigRational a = rand_rational(g, 40, 9) * pow(BigRational(p), rand_int(g, -3, 4));
    if (a == 0 || !radical_irreducible(n, a)) continue;
    PadicRadical x = make_padic(p, n, a);
    auto a2 = normalize_eisenstein(x);
    CHECK(a2.has_value() == (std::gcd(x.v, static_cast<long>(n)) == 1));
    if (a2) {
      CHECK(valuation(*a2, p) == 1);
      // a2 / a^s is an n-th power for some s coprime to n.
      bool found = false;
      for (unsigned long s = 1; s <= n && !found; ++s) {
        if (std::gcd(s, n) != 1) continue;
        BigRational root;
        found = rational_root(*a2 / pow(a, static_cast<long>(s)), static_cast<unsigned>(n), root);
      }
      CHECK(found);
    }
    // Invariance under a -> a c^n for a p-unit c.
    BigRational c = make_rational(rand_int(g, 1, 9) * p + 1, rand_int(g, 0, 3) * p + 1);
    RamificationReport r1 = ramification_classify(x);
    RamificationReport r2 = ramification_classify(make_padic(p, n, a * pow(c, static_cast<long>(n))));
    CHECK(r1.verdict == r2.verdict);
    CHECK(r1.route == r2.route);
    CHECK(r1.totally_ramified == r2.totally_ramified);
    if (r1.verdict == "free") CHECK(!r1.route.empty());
    ++done;
  }
}

TEST_CASE("ramification verdicts") {
  RamificationReport a = ramification_classify(make_padic(5, 3, 5));
  CHECK(a.tame);
  CHECK(a.totally_ramified);
  CHECK(a.verdict == "free");
  CHECK(a.route == "tame_padic");
  CHECK(!a.max_ramified);

  RamificationReport b = ramification_classify(make_padic(3, 3, 3));
  CHECK(!b.tame);
  CHECK(*b.max_ramified);
  CHECK(b.verdict == "free");
  CHECK(b.route == "max_ramified_padic");
  CHECK(*b.jump_bound == 3);

  RamificationReport c = ramification_classify(make_padic(3, 3, 2));
  CHECK(!c.tame);
  CHECK(c.verdict == "undetermined");

  RamificationReport d = ramification_classify(make_padic(5, 3, 2));
  CHECK(d.verdict == "undetermined");

  CHECK(ramification_classify(make_padic(3, 15, 3)).route == "eisenstein_padic");
  CHECK(ramification_classify(make_padic(2, 4, 2)).verdict == "undetermined");
  CHECK_THROWS_AS(make_padic(4, 3, 2), Error);
  CHECK_THROWS_AS(make_padic(3, 3, 8), Error);
}

TEST_CASE("maximal ramification and jump bounds") {
  auto m = max_ramified_test(make_padic(3, 3, 3));
  CHECK(m.max_ramified);
  CHECK(*m.witness == 3);
  CHECK(*max_ramified_test(make_padic(3, 3, 9)).witness == 3);
  CHECK(!max_ramified_test(make_padic(3, 3, 2)).max_ramified);
  CHECK_THROWS_AS(max_ramified_test(make_padic(3, 5, 3)), Error);
  CHECK(jump_bound(3, 1, 2) == 3);
  CHECK(jump_bound(2, 1, 1) == 2);
  CHECK(jump_bound(3, 1, 1) == make_rational(3, 2));
}
