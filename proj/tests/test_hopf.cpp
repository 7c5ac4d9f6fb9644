#include <doctest.h>

#include "radix/errors.hpp"
#include "radix/hopf.hpp"
#include "support.hpp"

using namespace radix;
using namespace testing_support;

namespace {

struct CubeRootTwo {
  SplittingAlgebra A = make_field(3, {{3, 2}});
  std::shared_ptr<const GaloisData> gd = radical_galois_group(A);
  HopfStructure H = descend(gd, enumerate_structures(gd->cosets()).at(0));
  std::size_t sigma = *H.galois_element(gd->index_of({{1}, 1}));
  std::size_t sigma2 = *H.galois_element(gd->index_of({{2}, 1}));
  AlgElem sqrt_m3 = BigRational(2) * A.zeta() + A.one();
  AlgElem alpha = A.alpha();

  GroupRingElem w() const {
    GroupRingElem h = H.zero();
    h[sigma] = sqrt_m3;
    h[sigma2] = -sqrt_m3;
    return h;
  }
  GroupRingElem trace() const {
    GroupRingElem h = H.group_element(sigma);
    h[sigma2] = A.one();
    return h;
  }
};

AlgElem rand_l(std::mt19937_64& g, const SplittingAlgebra& A) {
  std::vector<BigRational> v(A.slots());
  for (auto& c : v) c = rand_rational(g, 6, 3);
  return A.from_l_coords(v);
}

}  // namespace

TEST_CASE("galois group of radical algebras") {
  CubeRootTwo c;
  CHECK(c.gd->group().order() == 6);
  CHECK(c.gd->cosets().subgroup().size() == 2);
  CHECK(c.gd->cosets().size() == 3);
  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) abelian = abelian && c.gd->group().mul(a, b) == c.gd->group().mul(b, a);
  CHECK(!abelian);

  auto q2 = radical_galois_group(make_field(2, {{2, 2}}));
  CHECK(q2->group().order() == 2);
  CHECK(q2->cosets().subgroup().size() == 1);
  auto triv = radical_galois_group(make_field(1, {{1, 5}}));
  CHECK(triv->group().order() == 1);

  CHECK_THROWS_AS(radical_galois_group(make_algebra({3, 2})), Error);
}

TEST_CASE("descent on the cube root of two") {
  CubeRootTwo c;
  CHECK(c.H.dim() == 3);
  for (auto& b : c.H.basis()) CHECK(c.H.is_fixed(b));
  GroupRingElem w = c.w();
  CHECK(c.H.contains(w));
  CHECK(c.H.contains(c.trace()));
  CHECK(c.H.act(w, c.alpha) == BigRational(-3) * c.alpha);
  CHECK(c.H.act(c.H.mul(w, w), c.alpha) == BigRational(9) * c.alpha);
  AlgElem x = c.alpha + c.A.pow(c.alpha, 2);
  CHECK(c.H.act(w, x) == BigRational(3) * (c.A.pow(c.alpha, 2) - c.alpha));
  CHECK(c.H.act(w, c.A.pow(c.alpha, 2)) == BigRational(3) * c.A.pow(c.alpha, 2));

  // Span equality with {1, sigma + sigma^2, w}.
  HopfStructure R = c.H.rebased({c.H.one(), c.trace(), w});
  CHECK(R.coords(w) == std::vector<BigRational>{0, 0, 1});
  CHECK(R.counit() == std::vector<BigRational>{1, 2, 0});
  CHECK_THROWS_AS(c.H.rebased({c.H.one(), c.trace(), c.H.one()}), Error);
  CHECK_THROWS_AS(c.H.coords(c.H.group_element(c.sigma) /* sigma alone is not G-fixed */), Error);
  CHECK_THROWS_AS(c.H.act(w, c.A.zeta()), Error);

  // w . 1 = 0 matches the counit.
  CHECK(c.H.act(w, c.A.one()).is_zero());
}

TEST_CASE("quadratic descent is the group algebra") {
  auto gd = radical_galois_group(make_field(2, {{2, 2}}));
  auto N = enumerate_structures(gd->cosets());
  REQUIRE(N.size() == 1);
  HopfStructure H = descend(gd, N[0]);
  CHECK(H.dim() == 2);
  auto s = *H.galois_element(gd->index_of({{1}, 1}));
  HopfStructure R = H.rebased({H.one(), H.group_element(s)});
  AlgElem r2 = R.algebra().alpha();
  CHECK(R.act_coords({0, 1}, r2) == -r2);
  auto sc = R.structure_constants();
  CHECK(sc[1][1] == std::vector<BigRational>{1, 0});
}

TEST_CASE("comultiplication and the module algebra law") {
  CubeRootTwo c;
  auto terms = c.H.comult(c.H.group_element(c.sigma));
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].eta == c.sigma);

  // w . (alpha * alpha) through the comultiplication.
  AlgElem lhs = c.H.act(c.w(), c.A.mul(c.alpha, c.alpha));
  AlgElem rhs = c.A.zero();
  for (auto& t : c.H.comult(c.w()))
    rhs = rhs + c.A.mul(t.coefficient, c.A.mul(c.A.apply(c.H.evaluation(t.eta), c.alpha),
                                                c.A.apply(c.H.evaluation(t.eta), c.alpha)));
  CHECK(lhs == rhs);
  CHECK(lhs == BigRational(3) * c.A.pow(c.alpha, 2));
}

TEST_CASE("module algebra law on seeded instances") {
  std::mt19937_64 g(77);
  std::vector<std::pair<unsigned long, long>> inst{{3, 2}, {2, 3}, {4, 2}, {5, 2}, {3, 5}, {4, 3}};
  std::vector<HopfStructure> hs;
  for (auto [n, a] : inst) {
    auto gd = radical_galois_group(make_field(n, {{n, a}}));
    for (auto& N : enumerate_structures(gd->cosets())) hs.push_back(descend(gd, N));
  }
  for (int k = 0; k < 240; ++k) {
    const HopfStructure& H = hs[static_cast<std::size_t>(k) % hs.size()];
    const SplittingAlgebra& A = H.algebra();
    std::vector<BigRational> h(H.dim());
    for (auto& v : h) v = rand_rational(g, 4, 3);
    AlgElem x = rand_l(g, A), y = rand_l(g, A);
    AlgElem lhs = hopf_act(H, h, A.mul(x, y));
    AlgElem rhs = A.zero();
    for (auto& t : hopf_comult(H, h)) {
      const Automorphism& e = H.evaluation(t.eta);
      rhs = rhs + A.mul(t.coefficient, A.mul(A.apply(e, x), A.apply(e, y)));
    }
    CHECK(lhs == rhs);
    // The action is well defined on cosets: any representative agrees on L.
    for (std::size_t eta = 0; eta < H.subgroup().size(); ++eta) {
      const Automorphism& rep = H.evaluation(eta);
      for (int s : H.galois().cosets().subgroup()) {
        Automorphism other = A.compose(rep, H.galois().autos()[static_cast<std::size_t>(s)]);
        CHECK(A.apply(other, x) == A.apply(rep, x));
      }
    }
    CHECK(hopf_act(H, std::vector<BigRational>(H.dim(), 0), x).is_zero());
  }
}

TEST_CASE("descent agrees with the naive semilinear fixed space") {
  for (auto [n, a] : std::vector<std::pair<unsigned long, long>>{{3, 2}, {2, 2}, {4, 2}, {4, 3}}) {
    auto gd = radical_galois_group(make_field(n, {{n, a}}));
    for (auto& N : enumerate_structures(gd->cosets())) {
      HopfStructure H = descend(gd, N);
      const SplittingAlgebra& A = gd->algebra();
      std::size_t dim = A.dim(), nN = N.size();
      std::vector<QMatrix> maps;
      for (std::size_t g = 0; g < gd->group().order(); ++g) {
        QMatrix F(nN * dim, nN * dim);
        for (std::size_t col = 0; col < nN * dim; ++col) {
          GroupRingElem e = H.zero();
          e[col / dim].coords[col % dim] = 1;
          GroupRingElem img = H.act_group(static_cast<int>(g), e);
          for (std::size_t r = 0; r < nN * dim; ++r) F(r, col) = img[r / dim].coords[r % dim];
        }
        maps.push_back(F);
      }
      QMatrix fixed = fixed_subspace(maps);
      REQUIRE(fixed.cols() == H.dim());
      for (std::size_t c = 0; c < fixed.cols(); ++c) {
        GroupRingElem h = H.zero();
        for (std::size_t r = 0; r < nN * dim; ++r) h[r / dim].coords[r % dim] = fixed(r, c);
        CHECK(H.contains(h));
      }
      // Canonical-map rank: the action matrix has rank n.
      std::vector<std::vector<BigRational>> rows;
      for (auto& w : H.basis())
        for (std::size_t j = 0; j < n; ++j) rows.push_back(A.l_coords(H.act(w, A.pow(A.alpha(), j))));
      CHECK(rank(QMatrix::from_rows(rows)) == n);
    }
  }
}

TEST_CASE("almost classical structures and complement labels") {
  CubeRootTwo c;
  auto v = almost_classical_test(c.gd->cosets(), c.H.subgroup());
  CHECK(complement_label(*c.gd, v) == "Q(zeta_3)");
  auto gd4 = radical_galois_group(make_field(4, {{4, 2}}));
  auto N4 = enumerate_structures(gd4->cosets());
  CHECK(N4.size() >= 1);
  int labelled = 0;
  for (auto& N : N4) labelled += complement_label(*gd4, almost_classical_test(gd4->cosets(), N)) == "Q(zeta_4)";
  CHECK(labelled == 1);
}

TEST_CASE("product structures") {
  auto g1 = radical_galois_group(make_field(2, {{2, 2}}));
  auto g2 = radical_galois_group(make_field(3, {{3, 3}}));
  HopfStructure H1 = descend(g1, enumerate_structures(g1->cosets()).at(0));
  HopfStructure H2 = descend(g2, enumerate_structures(g2->cosets()).at(0));
  ProductSubgroup P = product_subgroup(H1, H2);
  CHECK(P.N.size() == 6);
  CHECK(normalized_by_lambda(P.galois->cosets(), P.N));
  HopfStructure H = product_structure(H1, H2);
  CHECK(H.dim() == 6);
  const SplittingAlgebra& A = H.algebra();

  // (h1 h2) . (x1 x2) = (h1 . x1)(h2 . x2).
  std::mt19937_64 g(5);
  for (int k = 0; k < 20; ++k) {
    std::size_t i1 = static_cast<std::size_t>(rand_int(g, 0, 1)), i2 = static_cast<std::size_t>(rand_int(g, 0, 2));
    AlgElem x1 = rand_l(g, H1.algebra()), x2 = rand_l(g, H2.algebra());
    std::vector<BigRational> e(6, 0);
    e[i1 * 3 + i2] = 1;
    AlgElem lhs = H.act_coords(e, A.mul(embed(H1.algebra(), A, {0}, x1), embed(H2.algebra(), A, {1}, x2)));
    AlgElem rhs = A.mul(embed(H1.algebra(), A, {0}, H1.act(H1.basis()[i1], x1)),
                        embed(H2.algebra(), A, {1}, H2.act(H2.basis()[i2], x2)));
    CHECK(lhs == rhs);
  }

  // Structure constants of the product are the tensor of the factors'.
  auto c = H.structure_constants(), c1 = H1.structure_constants(), c2 = H2.structure_constants();
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      for (std::size_t r = 0; r < 6; ++r)
        CHECK(c[a][b][r] == c1[a / 3][b / 3][r / 3] * c2[a % 3][b % 3][r % 3]);

  // A trivial factor leaves the structure unchanged.
  auto g0 = radical_galois_group(make_field(1, {{1, 5}}));
  HopfStructure H0 = descend(g0, enumerate_structures(g0->cosets()).at(0));
  CHECK(product_subgroup(H1, H0).N.size() == 2);

  // Q(cbrt 2) and Q(6th root of -3) share sqrt(-3): no product structure.
  auto g3 = radical_galois_group(make_field(3, {{3, 2}}));
  HopfStructure H3 = descend(g3, enumerate_structures(g3->cosets()).at(0));
  auto g6 = radical_galois_group(make_field(2, {{2, -3}}));
  HopfStructure H6 = descend(g6, enumerate_structures(g6->cosets()).at(0));
  CHECK_THROWS_AS(product_subgroup(H3, H6), Error);
}
