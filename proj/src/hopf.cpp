#include "radix/hopf.hpp"

#include <algorithm>
#include <map>

#include "radix/errors.hpp"

namespace radix {

namespace {

FiniteGroup table_of(const SplittingAlgebra& A, const std::vector<Automorphism>& autos) {
  std::map<std::pair<std::vector<unsigned long>, unsigned long>, int> index;
  for (std::size_t i = 0; i < autos.size(); ++i) index[{autos[i].j, autos[i].t}] = static_cast<int>(i);
  std::size_t n = autos.size();
  std::vector<int> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Automorphism c = A.compose(autos[a], autos[b]);
      table[a * n + b] = index.at({c.j, c.t});
    }
  return FiniteGroup(n, std::move(table));
}

std::vector<int> stabilizer_of_l(const std::vector<Automorphism>& autos) {
  std::vector<int> out;
  for (std::size_t i = 0; i < autos.size(); ++i) {
    bool zero = true;
    for (auto j : autos[i].j) zero = zero && j == 0;
    if (zero) out.push_back(static_cast<int>(i));
  }
  return out;
}

AlgElem coefficient_sum(const SplittingAlgebra& A, const GroupRingElem& h) {
  AlgElem s = A.zero();
  for (auto& c : h) s = s + c;
  return s;
}

}  // namespace

GaloisData::GaloisData(SplittingAlgebra algebra, std::vector<Automorphism> autos, FiniteGroup group,
                       CosetSpace cosets)
    : algebra_(std::move(algebra)), autos_(std::move(autos)), cosets_(std::move(cosets)) {
  (void)group;
}

int GaloisData::index_of(const Automorphism& g) const {
  for (std::size_t i = 0; i < autos_.size(); ++i)
    if (autos_[i] == g) return static_cast<int>(i);
  return -1;
}

std::vector<int> GaloisData::cyclotomic_kernel() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < autos_.size(); ++i)
    if (autos_[i].t == 1) out.push_back(static_cast<int>(i));
  return out;
}

std::shared_ptr<const GaloisData> radical_galois_group(const SplittingAlgebra& A) {
  if (!A.field_certified()) throw Error(Errc::NotAField, "splitting algebra is not certified as a field");
  auto autos = A.automorphisms();
  FiniteGroup G = table_of(A, autos);
  CosetSpace X(G, stabilizer_of_l(autos));
  return std::make_shared<const GaloisData>(A, std::move(autos), G, std::move(X));
}

// ---------------------------------------------------------------------------

HopfStructure::HopfStructure(std::shared_ptr<const GaloisData> gd, RegularSubgroup N)
    : galois_(std::move(gd)), N_(std::move(N)) {
  const CosetSpace& X = galois_->cosets();
  if (N_.degree() != X.size()) throw Error(Errc::DimensionMismatch, "N does not act on X");
  std::size_t order = galois_->group().order();
  conj_.assign(order, std::vector<std::size_t>(N_.size()));
  for (std::size_t g = 0; g < order; ++g) {
    const Perm& l = X.lambda(static_cast<int>(g));
    Perm li = perm_inverse(l);
    for (std::size_t e = 0; e < N_.size(); ++e) {
      int k = N_.index_of(perm_compose(perm_compose(l, N_.elements()[e]), li));
      if (k < 0) throw Error(Errc::DimensionMismatch, "N is not normalized by lambda(G)");
      conj_[g][e] = static_cast<std::size_t>(k);
    }
  }
  evaluation_.resize(N_.size());
  for (std::size_t e = 0; e < N_.size(); ++e) {
    int c = perm_inverse(N_.elements()[e])[static_cast<std::size_t>(X.identity_coset())];
    evaluation_[e] = static_cast<std::size_t>(X.reps()[static_cast<std::size_t>(c)]);
  }
}

GroupRingElem HopfStructure::zero() const { return GroupRingElem(N_.size(), algebra().zero()); }

GroupRingElem HopfStructure::group_element(std::size_t eta) const {
  GroupRingElem h = zero();
  h.at(eta) = algebra().one();
  return h;
}

GroupRingElem HopfStructure::one() const {
  return group_element(static_cast<std::size_t>(N_.index_of(perm_identity(N_.degree()))));
}

std::optional<std::size_t> HopfStructure::galois_element(int g) const {
  int k = N_.index_of(perm_inverse(galois_->cosets().lambda(g)));
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

const Automorphism& HopfStructure::evaluation(std::size_t eta) const { return galois_->autos()[evaluation_.at(eta)]; }

GroupRingElem HopfStructure::element(const std::vector<BigRational>& c) const {
  if (c.size() != basis_.size()) throw Error(Errc::DimensionMismatch, "coordinate vector length");
  GroupRingElem h = zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t e = 0; e < h.size(); ++e) h[e] = h[e] + c[i] * basis_[i][e];
  }
  return h;
}

std::vector<BigRational> HopfStructure::pivot_values(const GroupRingElem& h) const {
  std::size_t dim = algebra().dim();
  std::vector<BigRational> v(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) v[k] = h.at(pivots_[k] / dim).coords[pivots_[k] % dim];
  return v;
}

std::vector<BigRational> HopfStructure::coords(const GroupRingElem& h) const {
  if (h.size() != N_.size()) throw Error(Errc::DimensionMismatch, "group ring element length");
  std::vector<BigRational> c = mat_vec(reader_, pivot_values(h));
  if (element(c) != h) throw Error(Errc::NotInH, "element is not in H");
  return c;
}

bool HopfStructure::contains(const GroupRingElem& h) const {
  try {
    coords(h);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::NotInH) return false;
    throw;
  }
}

GroupRingElem HopfStructure::act_group(int g, const GroupRingElem& h) const {
  GroupRingElem out = zero();
  const Automorphism& a = galois_->autos()[static_cast<std::size_t>(g)];
  for (std::size_t e = 0; e < h.size(); ++e)
    if (!h[e].is_zero()) out[conj_[static_cast<std::size_t>(g)][e]] = algebra().apply(a, h[e]);
  return out;
}

bool HopfStructure::is_fixed(const GroupRingElem& h) const {
  const FiniteGroup& G = galois_->group();
  std::vector<int> all(G.order());
  for (std::size_t g = 0; g < all.size(); ++g) all[g] = static_cast<int>(g);
  for (int g : G.generators_of(all))
    if (act_group(g, h) != h) return false;
  return true;
}

GroupRingElem HopfStructure::mul(const GroupRingElem& a, const GroupRingElem& b) const {
  GroupRingElem out = zero();
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x].is_zero()) continue;
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (b[y].is_zero()) continue;
      std::size_t xy = static_cast<std::size_t>(N_.mul(x, y));
      out[xy] = out[xy] + algebra().mul(a[x], b[y]);
    }
  }
  return out;
}

std::vector<BigRational> HopfStructure::mul_coords(const std::vector<BigRational>& a,
                                                   const std::vector<BigRational>& b) const {
  return coords(mul(element(a), element(b)));
}

std::vector<std::vector<std::vector<BigRational>>> HopfStructure::structure_constants() const {
  std::size_t n = basis_.size();
  std::vector<std::vector<std::vector<BigRational>>> c(n, std::vector<std::vector<BigRational>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      c[i][j] = coords(mul(basis_[i], basis_[j]));
      if (N_.is_abelian() || i == j) {
        c[j][i] = c[i][j];
      }
    }
  if (!N_.is_abelian())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) c[i][j] = coords(mul(basis_[i], basis_[j]));
  return c;
}

AlgElem HopfStructure::act(const GroupRingElem& h, const AlgElem& x) const {
  const SplittingAlgebra& A = algebra();
  if (!member_subfield(A, x, Subfield::L)) throw Error(Errc::NotInL, "argument is not in L");
  AlgElem out = A.zero();
  for (std::size_t e = 0; e < h.size(); ++e)
    if (!h[e].is_zero()) out = out + A.mul(h[e], A.apply(evaluation(e), x));
  if (!member_subfield(A, out, Subfield::L)) throw Error(Errc::NotInL, "action left L; structure data is corrupt");
  return out;
}

AlgElem HopfStructure::act_coords(const std::vector<BigRational>& h, const AlgElem& x) const {
  return act(element(h), x);
}

std::vector<ComultTerm> HopfStructure::comult(const GroupRingElem& h) const {
  std::vector<ComultTerm> out;
  for (std::size_t e = 0; e < h.size(); ++e)
    if (!h[e].is_zero()) out.push_back({h[e], e});
  return out;
}

void HopfStructure::install_basis(std::vector<GroupRingElem> basis, std::vector<std::size_t> pivots, QMatrix reader) {
  basis_ = std::move(basis);
  pivots_ = std::move(pivots);
  reader_ = std::move(reader);
  counit_.clear();
  const SplittingAlgebra& A = algebra();
  for (auto& w : basis_) {
    AlgElem s = coefficient_sum(A, w);
    if (!member_subfield(A, s, Subfield::K)) throw Error(Errc::NotInH, "counit value is not rational");
    counit_.push_back(s.coords[0]);
  }
}

HopfStructure HopfStructure::descend(std::shared_ptr<const GaloisData> gd, const RegularSubgroup& N) {
  HopfStructure H(gd, N);
  const SplittingAlgebra& A = gd->algebra();
  const FiniteGroup& G = gd->group();
  std::size_t order = G.order(), nN = N.size(), dim = A.dim(), phi = A.phi();
  std::vector<int> all(order);
  for (std::size_t g = 0; g < order; ++g) all[g] = static_cast<int>(g);
  std::vector<int> gens = G.generators_of(all);

  std::vector<std::vector<BigRational>> rows;
  std::vector<bool> seen(nN, false);
  for (std::size_t e0 = 0; e0 < nN; ++e0) {
    if (seen[e0]) continue;
    // Orbit of e0 under conjugation, with a transporter for each member.
    std::vector<std::size_t> orbit{e0};
    std::map<std::size_t, int> transporter{{e0, G.identity()}};
    seen[e0] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (int g : gens) {
        std::size_t f = H.conj_[static_cast<std::size_t>(g)][orbit[k]];
        if (transporter.count(f)) continue;
        transporter[f] = G.mul(g, transporter[orbit[k]]);
        seen[f] = true;
        orbit.push_back(f);
      }
    std::vector<int> stab;
    for (std::size_t g = 0; g < order; ++g)
      if (H.conj_[g][e0] == e0) stab.push_back(static_cast<int>(g));
    std::vector<int> sgens = G.generators_of(stab);

    // Fixed field of the stabilizer, slot by slot (automorphisms keep slots).
    for (std::size_t s = 0; s < A.slots(); ++s) {
      std::vector<QMatrix> blocks;
      for (int g : sgens) {
        QMatrix B(phi, phi);
        for (std::size_t i = 0; i < phi; ++i) {
          AlgElem b = A.zero();
          b.coords[s * phi + i] = 1;
          AlgElem img = A.apply(gd->autos()[static_cast<std::size_t>(g)], b);
          for (std::size_t q = 0; q < phi; ++q) B(q, i) = img.coords[s * phi + q];
        }
        blocks.push_back(B - QMatrix::identity(phi));
      }
      QMatrix fixed = blocks.empty() ? QMatrix::identity(phi) : kernel(vstack(blocks));
      for (std::size_t c = 0; c < fixed.cols(); ++c) {
        AlgElem x = A.zero();
        for (std::size_t q = 0; q < phi; ++q) x.coords[s * phi + q] = fixed(q, c);
        std::vector<BigRational> row(nN * dim);
        for (std::size_t f : orbit) {
          AlgElem y = A.apply(gd->autos()[static_cast<std::size_t>(transporter[f])], x);
          for (std::size_t k = 0; k < dim; ++k) row[f * dim + k] = y.coords[k];
        }
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.size() != gd->cosets().size())
    throw Error(Errc::DimensionMismatch, "fixed space has dimension " + std::to_string(rows.size()) + ", expected " +
                                             std::to_string(gd->cosets().size()));
  QMatrix R = QMatrix::from_rows(rows);
  std::vector<std::size_t> piv = rref(R);
  if (piv.size() != rows.size()) throw Error(Errc::Internal, "descent basis is dependent");
  std::vector<GroupRingElem> basis;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    GroupRingElem h = H.zero();
    for (std::size_t f = 0; f < nN; ++f)
      for (std::size_t k = 0; k < dim; ++k) h[f].coords[k] = R(r, f * dim + k);
    basis.push_back(std::move(h));
  }
  H.install_basis(std::move(basis), std::move(piv), QMatrix::identity(rows.size()));
  return H;
}

HopfStructure HopfStructure::rebased(const std::vector<GroupRingElem>& W) const {
  if (W.size() != basis_.size()) throw Error(Errc::RankDeficient, "basis has the wrong size");
  std::vector<std::vector<BigRational>> cols;
  for (auto& w : W) cols.push_back(coords(w));
  QMatrix P = QMatrix::from_columns(cols, basis_.size());
  QMatrix Pinv;
  try {
    Pinv = mat_inverse(P);
  } catch (const Error&) {
    throw Error(Errc::RankDeficient, "elements do not form a basis of H");
  }
  HopfStructure H = *this;
  H.install_basis(W, pivots_, Pinv * reader_);
  return H;
}

HopfStructure descend(std::shared_ptr<const GaloisData> gd, const RegularSubgroup& N) {
  return HopfStructure::descend(std::move(gd), N);
}

AlgElem hopf_act(const HopfStructure& H, const std::vector<BigRational>& h, const AlgElem& x) {
  return H.act_coords(h, x);
}

std::vector<ComultTerm> hopf_comult(const HopfStructure& H, const std::vector<BigRational>& h) {
  return H.comult(H.element(h));
}

HopfStructure cyclotomic_complement_structure(std::shared_ptr<const GaloisData> gd) {
  RegularSubgroup N = structure_of_complement(gd->cosets(), gd->cyclotomic_kernel());
  return HopfStructure::descend(std::move(gd), N);
}

std::string complement_label(const GaloisData& gd, const AlmostClassicalVerdict& v) {
  if (!v.almost_classical) return "not almost classical";
  if (!v.complement) return "almost classical, no complement witness";
  std::vector<int> J = *v.complement, ker = gd.cyclotomic_kernel();
  std::sort(J.begin(), J.end());
  if (J == ker) return "Q(zeta_" + std::to_string(gd.algebra().cyclo_order()) + ")";
  return "fixed field of a normal complement of order " + std::to_string(J.size());
}

// ---------------------------------------------------------------------------

ProductSubgroup product_subgroup(const HopfStructure& H1, const HopfStructure& H2) {
  const SplittingAlgebra& A1 = H1.algebra();
  const SplittingAlgebra& A2 = H2.algebra();
  unsigned long m = lcm_u(A1.cyclo_order(), A2.cyclo_order());
  std::vector<RadicalDescriptor> rads = A1.radicals();
  rads.insert(rads.end(), A2.radicals().begin(), A2.radicals().end());
  SplittingAlgebra A = [&] {
    try {
      return make_field(m, rads);
    } catch (const Error& e) {
      if (e.code() == Errc::NotAField) throw Error(Errc::NotDisjoint, "compositum does not have full degree");
      throw;
    }
  }();
  ProductSubgroup P{radical_galois_group(A), RegularSubgroup({perm_identity(1)}), {}, {}, {}};
  const CosetSpace& X = P.galois->cosets();
  const CosetSpace& X1 = H1.galois().cosets();
  const CosetSpace& X2 = H2.galois().cosets();
  std::size_t k1 = A1.radicals().size();
  std::vector<std::size_t> inverse_psi(X1.size() * X2.size());
  P.psi1.resize(X.size());
  P.psi2.resize(X.size());
  for (std::size_t c = 0; c < X.size(); ++c) {
    const Automorphism& g = P.galois->autos()[static_cast<std::size_t>(X.reps()[c])];
    Automorphism g1{std::vector<unsigned long>(g.j.begin(), g.j.begin() + static_cast<long>(k1)), 1};
    Automorphism g2{std::vector<unsigned long>(g.j.begin() + static_cast<long>(k1), g.j.end()), 1};
    P.psi1[c] = static_cast<std::size_t>(X1.coset_of(H1.galois().index_of(g1)));
    P.psi2[c] = static_cast<std::size_t>(X2.coset_of(H2.galois().index_of(g2)));
    inverse_psi[P.psi1[c] * X2.size() + P.psi2[c]] = c;
  }
  std::vector<Perm> elems;
  for (auto& e1 : H1.subgroup().elements())
    for (auto& e2 : H2.subgroup().elements()) {
      Perm p(X.size());
      for (std::size_t c = 0; c < X.size(); ++c)
        p[c] = static_cast<int>(inverse_psi[static_cast<std::size_t>(e1[P.psi1[c]]) * X2.size() +
                                            static_cast<std::size_t>(e2[P.psi2[c]])]);
      elems.push_back(std::move(p));
    }
  try {
    P.N = RegularSubgroup(elems);
  } catch (const Error&) {
    throw Error(Errc::NotProductStructure, "iota(N1 x N2) is not a regular subgroup");
  }
  if (!normalized_by_lambda(X, P.N)) throw Error(Errc::NotProductStructure, "iota(N1 x N2) is not normalized");
  std::size_t n2 = H2.subgroup().size();
  P.iota.assign(H1.subgroup().size(), std::vector<std::size_t>(n2));
  for (std::size_t a = 0; a < H1.subgroup().size(); ++a)
    for (std::size_t b = 0; b < n2; ++b) P.iota[a][b] = static_cast<std::size_t>(P.N.index_of(elems[a * n2 + b]));
  return P;
}

HopfStructure product_structure(const HopfStructure& H1, const HopfStructure& H2) {
  ProductSubgroup P = product_subgroup(H1, H2);
  HopfStructure H = HopfStructure::descend(P.galois, P.N);
  const SplittingAlgebra& A = H.algebra();
  std::size_t k1 = H1.algebra().radicals().size(), k2 = H2.algebra().radicals().size();
  std::vector<std::size_t> map1(k1), map2(k2);
  for (std::size_t r = 0; r < k1; ++r) map1[r] = r;
  for (std::size_t r = 0; r < k2; ++r) map2[r] = k1 + r;
  std::size_t id1 = static_cast<std::size_t>(H1.subgroup().index_of(perm_identity(H1.subgroup().degree())));
  std::size_t id2 = static_cast<std::size_t>(H2.subgroup().index_of(perm_identity(H2.subgroup().degree())));
  auto lift1 = [&](const GroupRingElem& w) {
    GroupRingElem h = H.zero();
    for (std::size_t e = 0; e < w.size(); ++e)
      if (!w[e].is_zero()) h[P.iota[e][id2]] = embed(H1.algebra(), A, map1, w[e]);
    return h;
  };
  auto lift2 = [&](const GroupRingElem& w) {
    GroupRingElem h = H.zero();
    for (std::size_t e = 0; e < w.size(); ++e)
      if (!w[e].is_zero()) h[P.iota[id1][e]] = embed(H2.algebra(), A, map2, w[e]);
    return h;
  };
  std::vector<GroupRingElem> W;
  for (auto& w1 : H1.basis()) {
    GroupRingElem l1 = lift1(w1);
    for (auto& w2 : H2.basis()) W.push_back(H.mul(l1, lift2(w2)));
  }
  try {
    return H.rebased(W);
  } catch (const Error& e) {
    throw Error(Errc::NotProductStructure, std::string("product basis does not descend: ") + e.what());
  }
}

}  // namespace radix
