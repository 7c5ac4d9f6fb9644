#include <doctest.h>

#include "radix/errors.hpp"
#include "radix/integral.hpp"
#include "support.hpp"

using namespace radix;
using namespace testing_support;

namespace {

HopfStructure complement_structure(unsigned long n, long a) {
  return cyclotomic_complement_structure(radical_galois_group(make_field(n, {{n, a}})));
}

IntegralBasis power_basis(const HopfStructure& H) { return monogenic_radical(H.algebra()); }

BigRational resultant_disc(unsigned long n, long a) {
  // disc(f) = (-1)^{n(n-1)/2} * prod over roots of f'(root) = (-1)^{n(n-1)/2} * Res(f, f')
  // For f = x^n - a, f'(r) = n r^{n-1}, and prod r^{n-1} = ((-1)^n * (-a))^{n-1}.
  BigRational prod_roots = (n % 2 == 0 ? BigRational(-a) : BigRational(a));
  BigRational res = pow(BigRational(static_cast<long>(n)), static_cast<long>(n)) * pow(prod_roots, static_cast<long>(n) - 1);
  return ((n * (n - 1) / 2) % 2 == 0 ? 1 : -1) * res;
}

}  // namespace

TEST_CASE("gassert monogenicity") {
  CHECK(monogenic_radical(make_field(3, {{3, 2}})).elements.size() == 3);
  CHECK_THROWS_AS(monogenic_radical(make_field(5, {{5, 7}})), Error);
  CHECK(gassert_condition({2, 2}));
  CHECK(!gassert_condition({3, 4}));  // cbrt(2) = cbrt(4)^2 / 2 is integral
  CHECK(!gassert_condition({2, make_rational(1, 2)}));
  CHECK(gassert_condition({2, -1}));
  CHECK(!gassert_condition({2, 5}));  // 5 = 1 mod 4
}

TEST_CASE("discriminant of x^n - a") {
  CHECK(disc_radical({3, 2}) == -108);
  CHECK(disc_radical({2, 2}) == 8);
  CHECK(disc_radical({1, 7}) == 1);
  CHECK(disc_radical({3, 3}) == -243);
  CHECK(disc_radical({5, 2}) == 50000);
  CHECK(disc_radical({3, 7}) == -1323);
  for (unsigned long n = 1; n <= 7; ++n)
    for (long a : {-5, -2, 2, 3, 6}) CHECK(disc_radical({n, a}) == resultant_disc(n, a));
}

TEST_CASE("matrix of the action and the eigenvalue matrix") {
  HopfStructure H = complement_structure(3, 2);
  IntegralBasis B = power_basis(H);
  ActionMatrix M = matrix_of_action(H, B);
  CHECK(M.stacked().rows() == 9);
  EigenvalueMatrix E = eigen_matrix(H, B.elements);
  // Block j is diagonal-by-row: its only nonzero row is row j, equal to row j of lambda.
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t r = 0; r < 3; ++r)
      CHECK(M.blocks[j].row(r) == (r == j ? E.lambda.row(j) : std::vector<BigRational>(3, 0)));

  auto g1 = radical_galois_group(make_field(1, {{1, 3}}));
  HopfStructure H1 = descend(g1, enumerate_structures(g1->cosets()).at(0));
  ActionMatrix M1 = matrix_of_action(H1, IntegralBasis{{H1.algebra().one()}, "supplied"});
  CHECK(M1.stacked() == QMatrix::from_rows({{1}}));
}

TEST_CASE("associated orders agree across paths") {
  for (auto [n, a] : std::vector<std::pair<unsigned long, long>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
    HopfStructure H = complement_structure(n, a);
    IntegralBasis B = power_basis(H);
    AssocOrderBasis hnf = assoc_order_hnf(matrix_of_action(H, B));
    EigenOrder eig = assoc_order_eigen(H, eigen_matrix(H, B.elements));
    CHECK(hnf.key == eig.order.key);
    for (auto& v : hnf.basis) CHECK(acts_integrally(H, v, B));
    for (auto& v : eig.order.basis) {
      for (long m : {2, 3}) {
        std::vector<BigRational> w;
        for (auto& x : v) w.push_back(x / m);
        CHECK(!acts_integrally(H, w, B));
      }
    }
    // Sum of the idempotents acts as the identity.
    std::vector<BigRational> s(n, 0);
    for (auto& v : eig.order.basis)
      for (std::size_t k = 0; k < n; ++k) s[k] += v[k];
    for (auto& g : B.elements) CHECK(H.act_coords(s, g) == g);
  }
}

TEST_CASE("classical structure on Q(sqrt 2)") {
  HopfStructure H = complement_structure(2, 2);
  IntegralBasis B = power_basis(H);
  AssocOrderBasis O = assoc_order_hnf(matrix_of_action(H, B));
  for (auto& v : O.basis) CHECK(acts_integrally(H, v, B));
  auto cert = freeness_certify(H, B, eigen_matrix(H, B.elements));
  CHECK(cert.verdict == "free_with_generator");
  CHECK(*cert.generator == H.algebra().one() + H.algebra().alpha());
}

TEST_CASE("theorem two generators") {
  HopfStructure H = complement_structure(3, 2);
  const SplittingAlgebra& A = H.algebra();
  IntegralBasis B = power_basis(H);
  EigenvalueMatrix E = eigen_matrix(H, B.elements);
  auto cert = freeness_certify(H, B, E);
  CHECK(cert.verdict == "free_with_generator");
  CHECK(cert.route == "theorem2_eigen");
  CHECK(*cert.generator == A.one() + A.alpha() + A.pow(A.alpha(), 2));
  CHECK(freeness_certify(H, B, std::nullopt).verdict == "undetermined");

  // beta = sum b_j gamma_j is a generator exactly when every b_j is a unit.
  AssocOrderBasis O = assoc_order_eigen(H, E).order;
  std::mt19937_64 g(8);
  for (int k = 0; k < 200; ++k) {
    std::vector<long> b(3);
    bool units = true;
    for (auto& x : b) {
      x = rand_int(g, -3, 3);
      if (x == 0) x = 1;
      units = units && (x == 1 || x == -1);
    }
    AlgElem beta = A.zero();
    for (std::size_t j = 0; j < 3; ++j) beta = beta + BigRational(b[j]) * B.elements[j];
    CHECK(is_free_generator(H, O, B, beta) == units);
  }
}

TEST_CASE("tensor products of orders") {
  HopfStructure H1 = complement_structure(2, 2), H2 = complement_structure(3, 3);
  HopfStructure H = product_structure(H1, H2);
  IntegralBasis B1 = power_basis(H1), B2 = power_basis(H2);
  IntegralBasis B = product_integral_basis(H.algebra(), H1.algebra(), B1, H2.algebra(), B2);
  TensorReport r = arith_disjoint_tensor(H1, B1, H2, B2, H, B);
  CHECK(r.arithmetically_disjoint);
  CHECK(r.kronecker_ok);
  CHECK(r.lattice_equal);
  CHECK(r.reduced_tensor_ok);
  std::vector<bool> used(r.row_permutation.size(), false);
  for (auto p : r.row_permutation) {
    REQUIRE(p < used.size());
    CHECK(!used[p]);
    used[p] = true;
  }
  auto cert = freeness_certify_tensor(H1, H2, H);
  CHECK(cert.verdict == "free_with_generator");

  HopfStructure G1 = complement_structure(2, 2), G2 = complement_structure(2, 3);
  HopfStructure G = product_structure(G1, G2);
  IntegralBasis C1 = power_basis(G1), C2 = power_basis(G2);
  CHECK_THROWS_AS(product_integral_basis(G.algebra(), G1.algebra(), C1, G2.algebra(), C2), Error);
  TensorReport s = arith_disjoint_tensor(G1, C1, G2, C2, G, IntegralBasis{std::vector<AlgElem>(4, G.algebra().one()), "supplied"});
  CHECK(!s.arithmetically_disjoint);
  CHECK(!s.checked);

  HopfStructure K1 = complement_structure(3, 2), K2 = complement_structure(3, 3);
  CHECK(freeness_certify_tensor(K1, K2, product_structure(K1, K2)).verdict == "undetermined");
}

TEST_CASE("tensor equality on the degree 15 compositum") {
  HopfStructure H1 = complement_structure(5, 2), H2 = complement_structure(3, 7);
  HopfStructure H = product_structure(H1, H2);
  IntegralBasis B1 = power_basis(H1), B2 = power_basis(H2);
  IntegralBasis B = product_integral_basis(H.algebra(), H1.algebra(), B1, H2.algebra(), B2);
  TensorReport r = arith_disjoint_tensor(H1, B1, H2, B2, H, B);
  CHECK(r.arithmetically_disjoint);
  CHECK(r.kronecker_ok);
  CHECK(r.lattice_equal);
}
