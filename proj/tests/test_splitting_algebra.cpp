#include <doctest.h>

#include "radix/errors.hpp"
#include "radix/splitting_algebra.hpp"
#include "support.hpp"

using namespace radix;
using namespace testing_support;

namespace {

AlgElem rand_elem(std::mt19937_64& g, const SplittingAlgebra& A, int density = 3) {
  AlgElem x = A.zero();
  for (auto& c : x.coords)
    if (rand_int(g, 0, density) == 0) c = rand_rational(g, 5, 3);
  return x;
}

AlgElem rand_l_elem(std::mt19937_64& g, const SplittingAlgebra& A) {
  std::vector<BigRational> v(A.slots());
  for (auto& c : v) c = rand_rational(g, 5, 3);
  return A.from_l_coords(v);
}

// Faddeev-LeVerrier characteristic polynomial.
QPoly charpoly(const QMatrix& a) {
  std::size_t n = a.rows();
  std::vector<BigRational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix t = mk;
    for (std::size_t i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
    mk = a * t;
    BigRational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
    c[n - k] = -tr / static_cast<unsigned long>(k);
  }
  return QPoly(std::move(c));
}

AlgElem eval_poly(const SplittingAlgebra& A, const QPoly& f, const AlgElem& x) {
  AlgElem r = A.zero(), p = A.one();
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    r = r + f.coeffs()[k] * p;
    p = A.mul(p, x);
  }
  return r;
}

}  // namespace

TEST_CASE("descriptor validation") {
  CHECK(radical_irreducible(3, 2));
  CHECK_FALSE(radical_irreducible(3, 8));
  CHECK_FALSE(radical_irreducible(2, BigRational(9, 4)));
  CHECK_FALSE(radical_irreducible(4, -4));   // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
  CHECK_FALSE(radical_irreducible(8, -64));  // -64 = -4 * 2^4
  CHECK(radical_irreducible(4, -1));
  CHECK(radical_irreducible(6, -3));
  CHECK(radical_irreducible(3, -2));
  CHECK_FALSE(radical_irreducible(3, -8));
  CHECK_THROWS_AS(make_descriptor(3, 8), Error);
  // Cross-check the power criterion against factoring x^n - a.
  for (unsigned long n = 1; n <= 8; ++n)
    for (long a = -20; a <= 20; ++a) {
      if (a == 0) continue;
      bool irr = poly_factor(QPoly::x_pow(n) - QPoly::constant(a)).size() == 1 &&
                 poly_factor(QPoly::x_pow(n) - QPoly::constant(a))[0].second == 1;
      CHECK_MESSAGE(radical_irreducible(n, a) == irr, "n=", n, " a=", a);
    }
}

TEST_CASE("algebra shapes") {
  auto A = make_algebra({3, 2});
  CHECK(A.dim() == 6);
  CHECK(A.phi() == 2);
  auto Q = make_algebra({1, 5});
  CHECK(Q.dim() == 1);
  CHECK(Q.alpha() == Q.rational(5));
  CHECK_THROWS_AS(make_algebra({3, 8}), Error);
}

TEST_CASE("element arithmetic in (3,2)") {
  auto A = make_algebra({3, 2});
  AlgElem a = A.alpha(), z = A.zeta();
  CHECK(A.pow(a, 3) == A.rational(2));
  CHECK(A.mul(z, A.mul(z, z)) == A.one());
  CHECK(A.mul(z, z) == -(A.one() + z));
  CHECK(elem_invert(A, a) == BigRational(1, 2) * A.pow(a, 2));
  CHECK(elem_invert(A, A.one()) == A.one());
  CHECK_THROWS_AS(elem_invert(A, A.zero()), Error);
}

TEST_CASE("ring axioms on seeded triples") {
  std::mt19937_64 g(11);
  std::vector<SplittingAlgebra> algs{make_algebra({3, 2}), make_algebra({4, 3}), make_algebra({5, BigRational(2, 3)}),
                                     SplittingAlgebra(6, {{2, 2}, {3, 3}})};
  for (int trial = 0; trial < 200; ++trial) {
    const auto& A = algs[static_cast<std::size_t>(trial) % algs.size()];
    AlgElem x = rand_elem(g, A), y = rand_elem(g, A), w = rand_elem(g, A);
    CHECK(A.mul(A.mul(x, y), w) == A.mul(x, A.mul(y, w)));
    CHECK(A.mul(x, y + w) == A.mul(x, y) + A.mul(x, w));
    CHECK(A.mul(x, y) == A.mul(y, x));
    CHECK(A.mul(x, A.one()) == x);
  }
}

TEST_CASE("automorphisms are ring homomorphisms") {
  std::mt19937_64 g(12);
  std::vector<SplittingAlgebra> algs{make_algebra({3, 2}), make_algebra({4, 3}), make_algebra({5, 2}),
                                     make_algebra({6, 5}), SplittingAlgebra(6, {{2, 2}, {3, 3}})};
  for (int trial = 0; trial < 240; ++trial) {
    const auto& A = algs[static_cast<std::size_t>(trial) % algs.size()];
    auto autos = A.automorphisms();
    const auto& s = autos[static_cast<std::size_t>(rand_int(g, 0, static_cast<long>(autos.size()) - 1))];
    AlgElem x = rand_elem(g, A), y = rand_elem(g, A);
    CHECK(A.apply(s, A.mul(x, y)) == A.mul(A.apply(s, x), A.apply(s, y)));
    CHECK(A.apply(s, x + y) == A.apply(s, x) + A.apply(s, y));
    CHECK(A.apply(s, A.one()) == A.one());
  }
}

TEST_CASE("named automorphisms on (3,2)") {
  auto A = make_algebra({3, 2});
  Automorphism sigma{{1}, 1}, tau{{0}, 2};
  CHECK(A.apply(sigma, A.alpha()) == A.mul(A.zeta(), A.alpha()));
  CHECK(A.apply(tau, A.zeta()) == A.mul(A.zeta(), A.zeta()));
  Automorphism tau_inv = tau;  // tau has order 2
  QMatrix lhs = A.automorphism_matrix(tau) * A.automorphism_matrix(sigma) * A.automorphism_matrix(tau_inv);
  QMatrix rhs = A.automorphism_matrix(sigma) * A.automorphism_matrix(sigma);
  CHECK(lhs == rhs);
}

TEST_CASE("composition law matches matrix composition") {
  for (unsigned long n = 1; n <= 8; ++n) {
    long a = n == 1 ? 5 : 2;
    if (n == 8) a = 3;
    auto A = make_algebra({n, a});
    auto autos = A.automorphisms();
    CHECK(autos.size() == n * euler_phi(n));
    for (auto& g1 : autos)
      for (auto& g2 : autos)
        CHECK(A.automorphism_matrix(A.compose(g1, g2)) == A.automorphism_matrix(g1) * A.automorphism_matrix(g2));
  }
}

TEST_CASE("conjugates of alpha") {
  for (unsigned long n : {2UL, 3UL, 5UL, 6UL}) {
    auto A = make_algebra({n, 3});
    std::vector<AlgElem> orbit, expect;
    for (auto& s : A.automorphisms()) {
      AlgElem y = A.apply(s, A.alpha());
      if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(y);
    }
    for (unsigned long j = 0; j < n; ++j) expect.push_back(A.mul(A.zeta_pow(j), A.alpha()));
    CHECK(orbit.size() == n);
    for (auto& e : expect) CHECK(std::find(orbit.begin(), orbit.end(), e) != orbit.end());
  }
}

TEST_CASE("minimal polynomials") {
  auto A = make_algebra({3, 2});
  CHECK(minimal_poly(A, A.zeta()) == qpoly({1, 1, 1}));
  CHECK(minimal_poly(A, A.alpha()) == qpoly({-2, 0, 0, 1}));
  AlgElem theta = A.zeta() + A.alpha();
  QPoly mu = minimal_poly(A, theta);
  CHECK(mu.degree() == 6);
  CHECK(eval_poly(A, mu, theta).is_zero());
  CHECK(poly_factor(mu).size() == 1);
}

TEST_CASE("minimal polynomial divides characteristic polynomial") {
  std::mt19937_64 g(13);
  std::vector<SplittingAlgebra> algs{make_field(3, {{3, 2}}), make_field(4, {{4, 3}}), make_field(5, {{5, 2}})};
  for (int trial = 0; trial < 30; ++trial) {
    const auto& A = algs[static_cast<std::size_t>(trial) % algs.size()];
    AlgElem x = rand_elem(g, A, 2);
    if (x.is_zero()) continue;
    QPoly mu = minimal_poly(A, x);
    CHECK(eval_poly(A, mu, x).is_zero());
    CHECK(divmod(charpoly(A.mult_matrix(x)), mu).second.is_zero());
    CHECK(A.mul(x, elem_invert(A, x)) == A.one());
    CHECK(member_subfield(A, x, Subfield::K) == (mu.degree() == 1));
  }
}

TEST_CASE("field certification") {
  auto c32 = certify_field(make_algebra({3, 2}));
  CHECK(c32.verdict == FieldVerdict::Field);
  CHECK(c32.minpoly.degree() == 6);
  auto c63 = certify_field(make_algebra({6, -3}));
  CHECK(c63.verdict == FieldVerdict::NotField);
  REQUIRE(c63.zero_divisor.has_value());
  auto A63 = make_algebra({6, -3});
  CHECK_THROWS_AS(elem_invert(A63, *c63.zero_divisor), Error);
  CHECK(certify_field(make_algebra({1, 5})).verdict == FieldVerdict::Field);
  // Q(sqrt 2) x Q(zeta_8) is not a field: sqrt 2 lies in Q(zeta_8).
  CHECK(certify_field(make_algebra({8, 2})).verdict == FieldVerdict::NotField);
  CHECK(certify_field(make_algebra({4, 2})).verdict == FieldVerdict::Field);
}

TEST_CASE("subfield membership") {
  auto A = make_algebra({3, 2});
  CHECK(member_subfield(A, A.pow(A.alpha(), 3), Subfield::K));
  CHECK_FALSE(member_subfield(A, A.zeta(), Subfield::L));
  CHECK(member_subfield(A, A.rational(BigRational(5, 3)), Subfield::K));
  CHECK(member_subfield(A, A.zeta(), Subfield::M));
  CHECK(member_subfield(A, A.alpha(), Subfield::L));
}

TEST_CASE("compositum degrees") {
  CHECK(compositum_degree(3, 3, 2) == 6);
  CHECK(compositum_degree(3, 6, -3) == 6);
  CHECK(compositum_degree(1, 3, 2) == 3);
  CHECK(compositum_degree(8, 2, 2) == 4);
  CHECK(compositum_degree(4, 2, -1) == 2);
}

TEST_CASE("embedding respects multiplication") {
  std::mt19937_64 g(14);
  auto A1 = make_algebra({2, 2});
  auto A2 = make_algebra({3, 3});
  SplittingAlgebra C(6, {{2, 2}, {3, 3}});
  for (int trial = 0; trial < 20; ++trial) {
    AlgElem x = rand_elem(g, A2), y = rand_elem(g, A2);
    CHECK(embed(A2, C, {1}, A2.mul(x, y)) == C.mul(embed(A2, C, {1}, x), embed(A2, C, {1}, y)));
    AlgElem u = rand_elem(g, A1), v = rand_elem(g, A1);
    CHECK(embed(A1, C, {0}, A1.mul(u, v)) == C.mul(embed(A1, C, {0}, u), embed(A1, C, {0}, v)));
  }
  CHECK(C.mul(C.alpha(0), C.alpha(0)) == C.rational(2));
}

TEST_CASE("element formatting") {
  auto A = make_algebra({3, 2});
  AlgElem b = A.one() + A.alpha() + A.pow(A.alpha(), 2);
  CHECK(A.format(b) == "1+a+a^2");
  CHECK(A.format(BigRational(-1, 2) * A.zeta()) == "-(1/2)*zeta");
  CHECK(A.format(A.zero()) == "0");
}
