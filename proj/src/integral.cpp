#include "radix/integral.hpp"

#include <map>

#include "radix/errors.hpp"

namespace radix {

bool gassert_condition(const RadicalDescriptor& d) {
  if (!is_integer(d.a)) return false;
  BigInt a = d.a.get_num();
  if (!is_squarefree(a)) return false;
  for (auto p : prime_divisors(d.n)) {
    BigInt p2 = BigInt(p) * BigInt(p), ap;
    mpz_powm_ui(ap.get_mpz_t(), a.get_mpz_t(), p, p2.get_mpz_t());
    if (mod_floor(ap - a, p2) == 0) return false;
  }
  return true;
}

IntegralBasis monogenic_radical(const SplittingAlgebra& A) {
  const RadicalDescriptor& d = A.descriptor();
  if (!is_integer(d.a)) throw Error(Errc::NotCertified, "radicand " + to_string(d.a) + " is not an integer");
  if (!gassert_condition(d))
    throw Error(Errc::NotCertified, "Z[alpha] is not the ring of integers for x^" + std::to_string(d.n) + " - " +
                                        to_string(d.a));
  IntegralBasis B{{}, "gassert_power_basis"};
  for (std::size_t j = 0; j < d.n; ++j) B.elements.push_back(A.pow(A.alpha(), j));
  return B;
}

BigRational disc_radical(const RadicalDescriptor& d) {
  long n = static_cast<long>(d.n);
  BigRational sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
  return sign * pow(BigRational(n), n) * pow(-d.a, n - 1);
}

IntegralBasis product_integral_basis(const SplittingAlgebra& A, const SplittingAlgebra& A1, const IntegralBasis& B1,
                                     const SplittingAlgebra& A2, const IntegralBasis& B2) {
  if (A1.radicals().size() != 1 || A2.radicals().size() != 1)
    throw Error(Errc::NotCertified, "product bases are certified for two simple radicals only");
  BigRational d1 = disc_radical(A1.descriptor()), d2 = disc_radical(A2.descriptor());
  if (!is_integer(d1) || !is_integer(d2) || gcd(d1.get_num(), d2.get_num()) != 1)
    throw Error(Errc::NotCertified, "discriminants " + to_string(d1) + " and " + to_string(d2) + " are not coprime");
  IntegralBasis B{{}, "product_of_certified"};
  for (auto& g1 : B1.elements)
    for (auto& g2 : B2.elements) B.elements.push_back(A.mul(embed(A1, A, {0}, g1), embed(A2, A, {1}, g2)));
  return B;
}

std::vector<BigRational> basis_coords(const SplittingAlgebra& A, const std::vector<AlgElem>& B, const AlgElem& x) {
  std::vector<std::vector<BigRational>> cols;
  for (auto& g : B) cols.push_back(A.l_coords(g));
  QMatrix S = QMatrix::from_columns(cols, A.slots());
  try {
    return solve(S, A.l_coords(x));
  } catch (const Error& e) {
    if (e.code() == Errc::SingularMatrix) throw Error(Errc::NotInL, "element is not in the span of the basis");
    throw;
  }
}

namespace {

// Inverse of the basis change taking B-coordinates to L-coordinates.
QMatrix coordinate_reader(const SplittingAlgebra& A, const IntegralBasis& B) {
  std::vector<std::vector<BigRational>> cols;
  for (auto& g : B.elements) cols.push_back(A.l_coords(g));
  return mat_inverse(QMatrix::from_columns(cols, A.slots()));
}

}  // namespace

ActionMatrix matrix_of_action(const HopfStructure& H, const IntegralBasis& B) {
  const SplittingAlgebra& A = H.algebra();
  std::size_t n = H.dim();
  if (B.elements.size() != n) throw Error(Errc::RankDeficient, "integral basis has the wrong size");
  QMatrix reader = coordinate_reader(A, B);
  ActionMatrix M;
  for (std::size_t j = 0; j < n; ++j) {
    QMatrix block(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      auto c = mat_vec(reader, A.l_coords(H.act(H.basis()[i], B.elements[j])));
      for (std::size_t r = 0; r < n; ++r) block(r, i) = c[r];
    }
    M.blocks.push_back(std::move(block));
  }
  if (rank(M.stacked()) != n) throw Error(Errc::RankDeficient, "matrix of the action has rank below n");
  return M;
}

AssocOrderBasis make_order(std::vector<std::vector<BigRational>> basis) {
  AssocOrderBasis O;
  O.key = lattice_key(QMatrix::from_rows(basis));
  O.basis = std::move(basis);
  return O;
}

ReducedMatrix reduced_matrix(const ActionMatrix& M) {
  QMatrix S = M.stacked();
  ReducedMatrix R;
  R.denominator = denominator_lcm(S);
  HnfResult h = hnf_reduce(BigRational(R.denominator) * S);
  if (h.rank != S.cols()) throw Error(Errc::SingularMatrix, "action matrix is rank deficient");
  R.D = BigRational(1) / BigRational(R.denominator) * h.reduced;
  return R;
}

AssocOrderBasis assoc_order_hnf(const ActionMatrix& M) {
  QMatrix Dinv = mat_inverse(reduced_matrix(M).D);
  std::vector<std::vector<BigRational>> basis;
  for (std::size_t c = 0; c < Dinv.cols(); ++c) basis.push_back(Dinv.column(c));
  return make_order(std::move(basis));
}

EigenOrder assoc_order_eigen(const HopfStructure& H, const EigenvalueMatrix& E) {
  std::size_t n = H.dim();
  std::vector<std::vector<BigRational>> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(E.omega.column(i));
  EigenOrder out;
  out.report.idempotent = out.report.orthogonal = true;
  std::vector<BigRational> zero(n, 0), sum(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) sum[k] += v[i][k];
    for (std::size_t j = 0; j < n; ++j) {
      auto p = H.mul_coords(v[i], v[j]);
      if (i == j && p != v[i]) out.report.idempotent = false;
      if (i != j && p != zero) out.report.orthogonal = false;
    }
  }
  out.report.sums_to_one = sum == H.coords(H.one());
  if (!out.report.idempotent || !out.report.orthogonal || !out.report.sums_to_one)
    throw Error(Errc::NotIdempotent, "the v_i are not a complete system of orthogonal idempotents");
  out.order = make_order(std::move(v));
  return out;
}

bool acts_integrally(const HopfStructure& H, const std::vector<BigRational>& h, const IntegralBasis& B) {
  const SplittingAlgebra& A = H.algebra();
  QMatrix reader = coordinate_reader(A, B);
  GroupRingElem e = H.element(h);
  for (auto& g : B.elements)
    for (auto& c : mat_vec(reader, A.l_coords(H.act(e, g))))
      if (!is_integer(c)) return false;
  return true;
}

bool is_free_generator(const HopfStructure& H, const AssocOrderBasis& order, const IntegralBasis& B,
                       const AlgElem& beta) {
  const SplittingAlgebra& A = H.algebra();
  QMatrix reader = coordinate_reader(A, B);
  std::vector<std::vector<BigRational>> cols;
  for (auto& v : order.basis) cols.push_back(mat_vec(reader, A.l_coords(H.act_coords(v, beta))));
  QMatrix C = QMatrix::from_columns(cols, B.elements.size());
  if (!C.is_integral()) return false;
  BigRational det = determinant(C);
  return det == 1 || det == -1;
}

FreenessCertificate freeness_certify(const HopfStructure& H, const IntegralBasis& B,
                                     const std::optional<EigenvalueMatrix>& E) {
  FreenessCertificate cert{"undetermined", std::nullopt, "", ""};
  if (!E) {
    cert.reason = "no eigen integral basis supplied";
    return cert;
  }
  std::optional<EigenOrder> eo;
  try {
    eo = assoc_order_eigen(H, *E);
  } catch (const Error& e) {
    if (e.code() != Errc::NotIdempotent) throw;
    cert.reason = "eigenvalue matrix does not give idempotents";
    return cert;
  }
  const SplittingAlgebra& A = H.algebra();
  AlgElem beta = A.zero();
  for (auto& g : E->basis) beta = beta + g;
  if (!is_free_generator(H, eo->order, B, beta)) {
    cert.reason = "sum of the eigen basis is not a free generator";
    return cert;
  }
  cert.verdict = "free_with_generator";
  cert.generator = beta;
  cert.route = "theorem2_eigen";
  return cert;
}

std::optional<std::vector<std::size_t>> match_rows(const QMatrix& M, const QMatrix& K) {
  if (M.rows() != K.rows() || M.cols() != K.cols()) return std::nullopt;
  std::map<std::vector<BigRational>, std::vector<std::size_t>> pool;
  for (std::size_t r = M.rows(); r-- > 0;) pool[M.row(r)].push_back(r);
  std::vector<std::size_t> perm;
  for (std::size_t r = 0; r < K.rows(); ++r) {
    auto it = pool.find(K.row(r));
    if (it == pool.end() || it->second.empty()) return std::nullopt;
    perm.push_back(it->second.back());
    it->second.pop_back();
  }
  return perm;
}

TensorReport arith_disjoint_tensor(const HopfStructure& H1, const IntegralBasis& B1, const HopfStructure& H2,
                                   const IntegralBasis& B2, const HopfStructure& H, const IntegralBasis& B) {
  std::size_t n1 = H1.dim(), n2 = H2.dim();
  if (H.dim() != n1 * n2 || B.elements.size() != n1 * n2)
    throw Error(Errc::NotProductStructure, "dimensions do not match a product");
  const RadicalDescriptor& d1 = H1.algebra().descriptor();
  const RadicalDescriptor& d2 = H2.algebra().descriptor();
  TensorReport rep;
  rep.strongly_disjoint = strong_disjoint_test(d1, d2).disjoint;
  rep.disc1 = disc_radical(d1);
  rep.disc2 = disc_radical(d2);
  rep.coprime_discriminants = gcd(rep.disc1.get_num(), rep.disc2.get_num()) == 1 && is_integer(rep.disc1) &&
                              is_integer(rep.disc2);
  rep.arithmetically_disjoint = rep.strongly_disjoint && rep.coprime_discriminants;
  if (!rep.arithmetically_disjoint) return rep;
  rep.checked = true;

  ActionMatrix M1 = matrix_of_action(H1, B1), M2 = matrix_of_action(H2, B2), M = matrix_of_action(H, B);
  QMatrix K = kron(M1.stacked(), M2.stacked());
  auto perm = match_rows(M.stacked(), K);
  if (!perm) throw Error(Errc::NotProductStructure, "no row permutation relates M(H,L) to M1 (x) M2");
  rep.row_permutation = *perm;
  QMatrix S = M.stacked(), PM(S.rows(), S.cols());
  for (std::size_t r = 0; r < S.rows(); ++r)
    for (std::size_t c = 0; c < S.cols(); ++c) PM(r, c) = S((*perm)[r], c);
  rep.kronecker_ok = PM == K;

  AssocOrderBasis O = assoc_order_hnf(M), O1 = assoc_order_hnf(M1), O2 = assoc_order_hnf(M2);
  std::vector<std::vector<BigRational>> tensor;
  for (auto& a : O1.basis)
    for (auto& b : O2.basis) {
      std::vector<BigRational> v;
      for (auto& x : a)
        for (auto& y : b) v.push_back(x * y);
      tensor.push_back(std::move(v));
    }
  rep.lattice_equal = make_order(std::move(tensor)).key == O.key;
  rep.reduced_tensor_ok =
      lattice_key(kron(reduced_matrix(M1).D, reduced_matrix(M2).D)) == lattice_key(S);
  return rep;
}

FreenessCertificate freeness_certify_tensor(const HopfStructure& H1, const HopfStructure& H2, const HopfStructure& H) {
  FreenessCertificate cert{"undetermined", std::nullopt, "", ""};
  const SplittingAlgebra &A1 = H1.algebra(), &A2 = H2.algebra(), &A = H.algebra();
  const RadicalDescriptor &d1 = A1.descriptor(), &d2 = A2.descriptor();
  if (!gassert_condition(d1) || !gassert_condition(d2)) {
    cert.reason = "a factor is not certified monogenic";
    return cert;
  }
  BigInt g = gcd(d1.a.get_num() * d1.n, d2.a.get_num() * d2.n);
  if (g != 1) {
    cert.reason = "gcd(a1 n1, a2 n2) = " + to_string(g);
    return cert;
  }
  IntegralBasis B1 = monogenic_radical(A1), B2 = monogenic_radical(A2);
  IntegralBasis B = product_integral_basis(A, A1, B1, A2, B2);
  AssocOrderBasis O = assoc_order_hnf(matrix_of_action(H, B));
  AlgElem b1 = A1.zero(), b2 = A2.zero();
  for (auto& x : B1.elements) b1 = b1 + x;
  for (auto& x : B2.elements) b2 = b2 + x;
  AlgElem beta = A.mul(embed(A1, A, {0}, b1), embed(A2, A, {1}, b2));
  if (!is_free_generator(H, O, B, beta)) {
    cert.reason = "product of the factor generators is not a free generator";
    return cert;
  }
  cert.verdict = "free_with_generator";
  cert.generator = beta;
  cert.route = "tensor_product";
  return cert;
}

}  // namespace radix
