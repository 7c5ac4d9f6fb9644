#include "radix/kummer.hpp"

#include <map>

#include "radix/errors.hpp"
#include "radix/lattice.hpp"

namespace radix {

EigenTestResult eigen_test(const HopfStructure& H, const AlgElem& x) {
  if (x.is_zero()) throw Error(Errc::ZeroElement, "eigenvectors are nonzero by convention");
  const SplittingAlgebra& A = H.algebra();
  std::vector<BigRational> xc = A.l_coords(x);
  std::size_t lead = 0;
  while (xc[lead] == 0) ++lead;
  EigenTestResult res;
  EigenReport rep{x, {}};
  for (std::size_t i = 0; i < H.dim(); ++i) {
    std::vector<BigRational> yc = A.l_coords(H.act(H.basis()[i], x));
    BigRational lambda = yc[lead] / xc[lead];
    for (std::size_t k = 0; k < yc.size(); ++k)
      if (yc[k] != lambda * xc[k]) {
        res.witness = i;
        return res;
      }
    rep.eigenvalues.push_back(lambda);
  }
  res.report = std::move(rep);
  return res;
}

EigenvalueMatrix eigen_matrix(const HopfStructure& H, const std::vector<AlgElem>& B) {
  std::size_t n = H.dim();
  const SplittingAlgebra& A = H.algebra();
  if (B.size() != n) throw Error(Errc::NotEigenBasis, "basis has the wrong size");
  std::vector<std::vector<BigRational>> rows, span;
  for (std::size_t j = 0; j < n; ++j) {
    if (B[j].is_zero() || !member_subfield(A, B[j], Subfield::L))
      throw Error(Errc::NotEigenBasis, "basis element " + std::to_string(j) + " is not a nonzero element of L");
    EigenTestResult t = eigen_test(H, B[j]);
    if (!t.is_eigen()) throw Error(Errc::NotEigenBasis, "basis element " + std::to_string(j) + " is not an eigenvector");
    rows.push_back(t.report->eigenvalues);
    span.push_back(A.l_coords(B[j]));
  }
  if (rank(QMatrix::from_rows(span)) != n) throw Error(Errc::NotEigenBasis, "elements do not span L");
  EigenvalueMatrix E;
  E.lambda = QMatrix::from_rows(rows);
  try {
    E.omega = mat_inverse(E.lambda);
  } catch (const Error&) {
    throw Error(Errc::SingularLambda, "eigenvalue matrix is singular");
  }
  E.basis = B;
  return E;
}

KummerCertificate h_kummer_certify(const HopfStructure& H, const std::vector<AlgElem>& gens) {
  const SplittingAlgebra& A = H.algebra();
  std::size_t n = H.dim();
  KummerCertificate cert;
  cert.exponent = A.cyclo_order();
  cert.generators = gens;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    EigenTestResult t = eigen_test(H, gens[g]);
    if (!t.is_eigen())
      throw Error(Errc::NotEigen, "generator " + std::to_string(g) + " is not an H-eigenvector (witness basis element " +
                                      std::to_string(*t.witness) + ")");
    cert.generator_eigenvalues.push_back(t.report->eigenvalues);
  }

  // Echelon selection among monomials in the generators, breadth first.
  std::vector<std::vector<BigRational>> span;
  auto independent = [&](const AlgElem& x) {
    auto rows = span;
    rows.push_back(A.l_coords(x));
    return rank(QMatrix::from_rows(rows)) == rows.size();
  };
  std::vector<AlgElem> queue{A.one()};
  span.push_back(A.l_coords(A.one()));
  cert.eigen_basis.push_back(A.one());
  for (std::size_t k = 0; k < queue.size() && span.size() < n; ++k)
    for (auto& g : gens) {
      AlgElem p = A.mul(queue[k], g);
      if (p.is_zero() || !independent(p)) continue;
      span.push_back(A.l_coords(p));
      cert.eigen_basis.push_back(p);
      queue.push_back(p);
      if (span.size() == n) break;
    }
  if (span.size() != n) throw Error(Errc::NotGenerating, "generators do not generate L");
  cert.h_kummer = true;
  for (auto& g : gens) {
    std::vector<std::vector<BigRational>> pw;
    AlgElem p = A.one();
    for (std::size_t e = 0; e < n; ++e, p = A.mul(p, g)) pw.push_back(A.l_coords(p));
    if (rank(QMatrix::from_rows(pw)) == n) cert.h_cyclic = true;
  }
  unsigned long l = 1;
  for (auto& d : A.radicals()) l = lcm_u(l, d.n);
  cert.almost_kummer = A.field_certified() && l == A.cyclo_order();
  cert.almost_cyclic = cert.almost_kummer && A.radicals().size() == 1;
  cert.complement = complement_label(H.galois(), almost_classical_test(H.galois().cosets(), H.subgroup()));
  return cert;
}

// ---------------------------------------------------------------------------

namespace {

bool is_field(const RadicalDescriptor& d) { return certify_field(make_algebra(d)).verdict == FieldVerdict::Field; }

}  // namespace

StrongDisjointReport strong_disjoint_test(const RadicalDescriptor& d1, const RadicalDescriptor& d2) {
  StrongDisjointReport rep;
  unsigned long n1 = d1.n, n2 = d2.n;
  if (n1 == n2 && d1.a > 0 && d2.a > 0 && is_field(d1) && is_field(d2)) {
    // Equal exponents share M, and real radicals of positive rationals have
    // degree equal to the order of their class group.
    RadicalClassGroup cg = radical_group_rank(n1, {d1.a, d2.a});
    std::vector<BigInt> inv = smith_invariants(cg.exponent_matrix);
    bool full = inv.size() == 2;
    for (auto& f : inv) full = full && gcd(f, BigInt(n1)) == 1;
    if (full) {
      rep.disjoint = true;
      rep.route = "totally_real_shortcut";
      rep.degree_l1m2 = rep.degree_l2m1 = n1 * euler_phi(n1);
      rep.degree_l1l2 = n1 * n2;
      return rep;
    }
  }
  rep.route = "compositum_degree";
  rep.degree_l1m2 = compositum_degree(n2, n1, d1.a);
  rep.degree_l2m1 = compositum_degree(n1, n2, d2.a);
  std::size_t want12 = n1 * euler_phi(n2), want21 = n2 * euler_phi(n1);
  if (rep.degree_l1m2 != want12) {
    rep.witness = "[L1 M2 : Q] = " + std::to_string(rep.degree_l1m2) + ", expected " + std::to_string(want12);
    return rep;
  }
  if (rep.degree_l2m1 != want21) {
    rep.witness = "[L2 M1 : Q] = " + std::to_string(rep.degree_l2m1) + ", expected " + std::to_string(want21);
    return rep;
  }
  FieldCertificate c = certify_field(SplittingAlgebra(1, {d1, d2}));
  if (c.verdict == FieldVerdict::Indeterminate) throw Error(Errc::Indeterminate, "could not certify [L1 L2 : Q]");
  if (c.verdict == FieldVerdict::NotField) {
    rep.witness = "L1 and L2 are not linearly disjoint: [L1 L2 : Q] < " + std::to_string(n1 * n2);
    return rep;
  }
  rep.degree_l1l2 = n1 * n2;
  rep.disjoint = true;
  return rep;
}

RadicalClassGroup radical_group_rank(unsigned long n, const std::vector<BigRational>& radicands) {
  RadicalClassGroup cg;
  cg.exponent = n;
  cg.generators = radicands;
  std::map<BigInt, std::size_t> primes;
  for (auto& a : radicands) {
    if (a == 0) throw Error(Errc::InvalidDescriptor, "radicands must be nonzero");
    for (auto& [p, e] : factorize(a.get_num())) primes.emplace(p, 0);
    for (auto& [p, e] : factorize(a.get_den())) primes.emplace(p, 0);
  }
  std::size_t c = 0;
  for (auto& [p, idx] : primes) {
    idx = c++;
    cg.columns.push_back(to_string(p));
  }
  bool sign = n % 2 == 0;
  if (sign) cg.columns.push_back("sign");
  QMatrix m(radicands.size(), cg.columns.size());
  std::vector<std::vector<long>> vecs;
  for (std::size_t i = 0; i < radicands.size(); ++i) {
    std::vector<long> v(cg.columns.size(), 0);
    for (auto& [p, idx] : primes) v[idx] = valuation(radicands[i], p);
    if (sign && radicands[i] < 0) v.back() = static_cast<long>(n / 2);
    for (std::size_t k = 0; k < v.size(); ++k) m(i, k) = v[k];
    vecs.push_back(v);
  }
  cg.exponent_matrix = m;
  cg.rank = cg.columns.empty() ? 0 : smith_rank_mod(m, n);

  long nl = static_cast<long>(n);
  for (std::size_t i = 0; i < radicands.size(); ++i)
    for (std::size_t j = i + 1; j < radicands.size(); ++j)
      for (unsigned long r = 1; r <= std::max(1UL, n - 1); ++r) {
        if (gcd_u(r, n) != 1) continue;
        bool match = true;
        for (std::size_t k = 0; k < vecs[i].size() && match; ++k)
          match = ((vecs[i][k] - static_cast<long>(r) * vecs[j][k]) % nl + nl) % nl == 0;
        if (!match) continue;
        BigRational q = radicands[i] / pow(radicands[j], static_cast<long>(r)), root;
        if (!rational_root(q, static_cast<unsigned>(n), root)) continue;
        cg.equivalences.push_back({i, j, r, root});
        break;
      }
  return cg;
}

Theorem1Result theorem1_certify(unsigned long n, const std::vector<RadicalDescriptor>& radicals) {
  if (radicals.empty()) throw Error(Errc::NotGenerating, "no radicals given");
  unsigned long l = 1;
  for (auto& d : radicals) {
    make_descriptor(d.n, d.a);
    if (n % d.n != 0) throw Error(Errc::NotMinimalExponent, std::to_string(d.n) + " does not divide " + std::to_string(n));
    l = lcm_u(l, d.n);
  }
  if (l != n) throw Error(Errc::NotMinimalExponent, "exponent " + std::to_string(n) + " is not minimal; lcm is " + std::to_string(l));
  for (std::size_t i = 0; i < radicals.size(); ++i)
    for (std::size_t j = i + 1; j < radicals.size(); ++j) {
      StrongDisjointReport r = strong_disjoint_test(radicals[i], radicals[j]);
      if (!r.disjoint) {
        std::size_t rk = radical_group_rank(n, {radicals[i].a, radicals[j].a}).rank;
        throw Error(Errc::NotStronglyDisjoint, "radicals " + std::to_string(i) + " and " + std::to_string(j) +
                                                   " are not strongly disjoint (" + r.witness + "; rank " +
                                                   std::to_string(rk) + ")");
      }
    }
  try {
    make_field(n, radicals);
  } catch (const Error& e) {
    if (e.code() == Errc::NotAField) throw Error(Errc::ComplementIntersects, "L meets Q(zeta_" + std::to_string(n) + ")");
    throw;
  }
  auto factor = [](const RadicalDescriptor& d) {
    return cyclotomic_complement_structure(radical_galois_group(make_field(d.n, {d})));
  };
  HopfStructure H = factor(radicals[0]);
  for (std::size_t i = 1; i < radicals.size(); ++i) H = product_structure(H, factor(radicals[i]));
  const SplittingAlgebra& A = H.algebra();
  std::vector<AlgElem> gens;
  for (std::size_t r = 0; r < radicals.size(); ++r) gens.push_back(A.alpha(r));
  KummerCertificate cert = h_kummer_certify(H, gens);
  if (cert.complement != "Q(zeta_" + std::to_string(n) + ")")
    throw Error(Errc::Internal, "product structure does not correspond to Q(zeta_n)");
  cert.exponent = n;
  cert.strongly_decomposable = true;
  cert.almost_kummer = true;
  cert.almost_cyclic = radicals.size() == 1;
  return {std::move(cert), std::move(H)};
}

}  // namespace radix
