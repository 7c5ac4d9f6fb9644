#include "radix/splitting_algebra.hpp"

#include <algorithm>
#include <numeric>

#include "radix/errors.hpp"

namespace radix {

// ---------------------------------------------------------------------------
// Descriptors

bool radical_irreducible(unsigned long n, const BigRational& a) {
  if (n == 0 || a == 0) return false;
  BigRational root;
  for (auto p : prime_divisors(n))
    if (rational_root(a, static_cast<unsigned>(p), root)) return false;
  if (n % 4 == 0) {
    // a = -4 b^4 ?
    BigRational b4 = -a / 4;
    if (b4 > 0 && rational_root(b4, 4, root)) return false;
  }
  return true;
}

RadicalDescriptor make_descriptor(unsigned long n, const BigRational& a) {
  if (n == 0) throw Error(Errc::InvalidDescriptor, "radical exponent must be positive");
  if (a == 0) throw Error(Errc::InvalidDescriptor, "radicand must be nonzero");
  if (!radical_irreducible(n, a))
    throw Error(Errc::InvalidDescriptor, "x^" + std::to_string(n) + " - (" + to_string(a) + ") is reducible over Q");
  return {n, a};
}

// ---------------------------------------------------------------------------
// AlgElem

bool AlgElem::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const BigRational& q) { return q == 0; });
}

AlgElem operator+(const AlgElem& x, const AlgElem& y) {
  AlgElem r = x;
  for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += y.coords[k];
  return r;
}

AlgElem operator-(const AlgElem& x, const AlgElem& y) {
  AlgElem r = x;
  for (std::size_t k = 0; k < r.coords.size(); ++k) r.coords[k] -= y.coords[k];
  return r;
}

AlgElem operator-(const AlgElem& x) {
  AlgElem r = x;
  for (auto& c : r.coords) c = -c;
  return r;
}

AlgElem operator*(const BigRational& s, const AlgElem& x) {
  AlgElem r = x;
  for (auto& c : r.coords) c *= s;
  return r;
}

// ---------------------------------------------------------------------------
// SplittingAlgebra

struct SplittingAlgebra::Impl {
  unsigned long m;
  std::vector<RadicalDescriptor> rads;
  std::size_t phi, slots, dim;
  QPoly cyclo;
  std::vector<std::size_t> stride;
  // zeta^e reduced, for e < max(m, 2 phi - 1)
  std::vector<std::vector<BigRational>> zpow;
  // slot products: target slot and radicand factor
  std::vector<std::size_t> prod_slot;
  std::vector<BigRational> prod_factor;
};

SplittingAlgebra::SplittingAlgebra(unsigned long m, std::vector<RadicalDescriptor> radicals) {
  if (m == 0) throw Error(Errc::InvalidDescriptor, "cyclotomic order must be positive");
  auto im = std::make_shared<Impl>();
  im->m = m;
  im->rads = std::move(radicals);
  for (auto& d : im->rads)
    if (d.n == 0 || d.a == 0) throw Error(Errc::InvalidDescriptor, "invalid radical");
  im->cyclo = cyclotomic(static_cast<unsigned>(m));
  im->phi = static_cast<std::size_t>(im->cyclo.degree());
  im->slots = 1;
  im->stride.assign(im->rads.size(), 1);
  for (std::size_t r = im->rads.size(); r-- > 0;) {
    im->stride[r] = im->slots;
    im->slots *= im->rads[r].n;
  }
  im->dim = im->phi * im->slots;

  std::size_t npow = std::max<std::size_t>(m, 2 * im->phi);
  std::vector<BigRational> v(im->phi);
  v[0] = 1;
  for (std::size_t e = 0; e < npow; ++e) {
    im->zpow.push_back(v);
    // multiply by zeta
    BigRational top = v[im->phi - 1];
    for (std::size_t i = im->phi - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < im->phi; ++i) v[i] -= top * im->cyclo.coeff(i);
  }

  std::size_t L = im->slots;
  im->prod_slot.resize(L * L);
  im->prod_factor.resize(L * L);
  for (std::size_t s1 = 0; s1 < L; ++s1)
    for (std::size_t s2 = 0; s2 < L; ++s2) {
      std::size_t s = 0;
      BigRational f = 1;
      for (std::size_t r = 0; r < im->rads.size(); ++r) {
        unsigned long n = im->rads[r].n;
        unsigned long e = (s1 / im->stride[r]) % n + (s2 / im->stride[r]) % n;
        if (e >= n) {
          e -= n;
          f *= im->rads[r].a;
        }
        s += e * im->stride[r];
      }
      im->prod_slot[s1 * L + s2] = s;
      im->prod_factor[s1 * L + s2] = f;
    }
  impl_ = std::move(im);
}

unsigned long SplittingAlgebra::cyclo_order() const { return impl_->m; }
const std::vector<RadicalDescriptor>& SplittingAlgebra::radicals() const { return impl_->rads; }
const RadicalDescriptor& SplittingAlgebra::descriptor() const {
  if (impl_->rads.size() != 1) throw Error(Errc::Internal, "algebra is not a single-radical algebra");
  return impl_->rads[0];
}
std::size_t SplittingAlgebra::phi() const { return impl_->phi; }
std::size_t SplittingAlgebra::dim() const { return impl_->dim; }
std::size_t SplittingAlgebra::slots() const { return impl_->slots; }
const QPoly& SplittingAlgebra::cyclo() const { return impl_->cyclo; }

SplittingAlgebra SplittingAlgebra::with_certificate(const FieldCertificate& cert) const {
  SplittingAlgebra r = *this;
  r.certified_ = cert.verdict == FieldVerdict::Field;
  return r;
}

std::vector<unsigned long> SplittingAlgebra::slot_exponents(std::size_t slot) const {
  std::vector<unsigned long> j(impl_->rads.size());
  for (std::size_t r = 0; r < j.size(); ++r) j[r] = (slot / impl_->stride[r]) % impl_->rads[r].n;
  return j;
}

std::size_t SplittingAlgebra::slot_of(const std::vector<unsigned long>& j) const {
  std::size_t s = 0;
  for (std::size_t r = 0; r < j.size(); ++r) s += (j[r] % impl_->rads[r].n) * impl_->stride[r];
  return s;
}

AlgElem SplittingAlgebra::zero() const { return AlgElem{std::vector<BigRational>(impl_->dim)}; }

AlgElem SplittingAlgebra::rational(const BigRational& q) const {
  AlgElem x = zero();
  x.coords[0] = q;
  return x;
}

AlgElem SplittingAlgebra::one() const { return rational(1); }

AlgElem SplittingAlgebra::zeta_pow(unsigned long e) const {
  AlgElem x = zero();
  const auto& v = impl_->zpow[e % impl_->m];
  std::copy(v.begin(), v.end(), x.coords.begin());
  return x;
}

AlgElem SplittingAlgebra::alpha(std::size_t r) const {
  if (r >= impl_->rads.size()) throw Error(Errc::Internal, "radical index out of range");
  if (impl_->rads[r].n == 1) return rational(impl_->rads[r].a);
  AlgElem x = zero();
  x.coords[impl_->stride[r] * impl_->phi] = 1;
  return x;
}

AlgElem SplittingAlgebra::from_l_coords(const std::vector<BigRational>& v) const {
  if (v.size() != impl_->slots) throw Error(Errc::DimensionMismatch, "L coordinate length");
  AlgElem x = zero();
  for (std::size_t s = 0; s < v.size(); ++s) x.coords[s * impl_->phi] = v[s];
  return x;
}

std::vector<BigRational> SplittingAlgebra::l_coords(const AlgElem& x) const {
  if (!member_subfield(*this, x, Subfield::L)) throw Error(Errc::NotInL, "element is not in L");
  std::vector<BigRational> v(impl_->slots);
  for (std::size_t s = 0; s < v.size(); ++s) v[s] = x.coords[s * impl_->phi];
  return v;
}

AlgElem SplittingAlgebra::from_m_coords(const std::vector<BigRational>& v) const {
  if (v.size() != impl_->phi) throw Error(Errc::DimensionMismatch, "M coordinate length");
  AlgElem x = zero();
  std::copy(v.begin(), v.end(), x.coords.begin());
  return x;
}

AlgElem SplittingAlgebra::mul(const AlgElem& x, const AlgElem& y) const {
  const Impl& im = *impl_;
  std::size_t phi = im.phi, L = im.slots, w = 2 * phi - 1;
  std::vector<std::size_t> nx, ny;
  for (std::size_t k = 0; k < im.dim; ++k) {
    if (x.coords[k] != 0) nx.push_back(k);
    if (y.coords[k] != 0) ny.push_back(k);
  }
  std::vector<BigRational> buf(L * w);
  BigRational t;
  for (auto u : nx) {
    std::size_t i1 = u % phi, s1 = u / phi;
    for (auto v : ny) {
      std::size_t i2 = v % phi, s2 = v / phi;
      std::size_t pk = s1 * L + s2;
      t = x.coords[u] * y.coords[v];
      if (im.prod_factor[pk] != 1) t *= im.prod_factor[pk];
      buf[im.prod_slot[pk] * w + i1 + i2] += t;
    }
  }
  AlgElem r = zero();
  for (std::size_t s = 0; s < L; ++s) {
    for (std::size_t e = 0; e < w; ++e) {
      const BigRational& c = buf[s * w + e];
      if (c == 0) continue;
      if (e < phi) {
        r.coords[s * phi + e] += c;
      } else {
        const auto& z = im.zpow[e];
        for (std::size_t i = 0; i < phi; ++i)
          if (z[i] != 0) r.coords[s * phi + i] += c * z[i];
      }
    }
  }
  return r;
}

AlgElem SplittingAlgebra::pow(const AlgElem& x, unsigned long e) const {
  AlgElem r = one(), b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

QMatrix SplittingAlgebra::mult_matrix(const AlgElem& x) const {
  QMatrix m(impl_->dim, impl_->dim);
  for (std::size_t k = 0; k < impl_->dim; ++k) {
    AlgElem e = zero();
    e.coords[k] = 1;
    AlgElem p = mul(x, e);
    for (std::size_t i = 0; i < impl_->dim; ++i) m(i, k) = p.coords[i];
  }
  return m;
}

bool SplittingAlgebra::supports_automorphisms() const {
  for (auto& d : impl_->rads)
    if (impl_->m % d.n != 0) return false;
  return true;
}

std::vector<Automorphism> SplittingAlgebra::automorphisms() const {
  if (!supports_automorphisms()) throw Error(Errc::Internal, "radical exponents must divide the cyclotomic order");
  std::vector<Automorphism> out;
  unsigned long m = impl_->m;
  for (unsigned long t = 1; t <= std::max(1UL, m - 1); ++t) {
    if (gcd_u(t, m) != 1) continue;
    for (std::size_t s = 0; s < impl_->slots; ++s) out.push_back({slot_exponents(s), t});
  }
  return out;
}

Automorphism SplittingAlgebra::compose(const Automorphism& g, const Automorphism& h) const {
  Automorphism r;
  r.j.resize(impl_->rads.size());
  for (std::size_t k = 0; k < r.j.size(); ++k) {
    unsigned long n = impl_->rads[k].n;
    r.j[k] = (g.j[k] + (g.t % n) * h.j[k]) % n;
  }
  r.t = (g.t * h.t) % impl_->m;
  if (impl_->m == 1) r.t = 1;
  return r;
}

AlgElem SplittingAlgebra::apply(const Automorphism& g, const AlgElem& x) const {
  const Impl& im = *impl_;
  if (g.j.size() != im.rads.size()) throw Error(Errc::Internal, "automorphism arity");
  if (gcd_u(g.t, im.m) != 1) throw Error(Errc::Internal, "automorphism t not a unit");
  std::vector<unsigned long> shift(im.slots);
  for (std::size_t s = 0; s < im.slots; ++s) {
    auto j = slot_exponents(s);
    unsigned long e = 0;
    for (std::size_t r = 0; r < j.size(); ++r) {
      if (im.m % im.rads[r].n != 0) throw Error(Errc::Internal, "automorphism undefined on this algebra");
      e = (e + j[r] * g.j[r] % im.m * (im.m / im.rads[r].n)) % im.m;
    }
    shift[s] = e;
  }
  AlgElem out = zero();
  for (std::size_t k = 0; k < im.dim; ++k) {
    if (x.coords[k] == 0) continue;
    std::size_t i = k % im.phi, s = k / im.phi;
    unsigned long e = (g.t * i + shift[s]) % im.m;
    const auto& z = im.zpow[e];
    for (std::size_t q = 0; q < im.phi; ++q)
      if (z[q] != 0) out.coords[s * im.phi + q] += x.coords[k] * z[q];
  }
  return out;
}

QMatrix SplittingAlgebra::automorphism_matrix(const Automorphism& g) const {
  QMatrix m(impl_->dim, impl_->dim);
  for (std::size_t k = 0; k < impl_->dim; ++k) {
    AlgElem e = zero();
    e.coords[k] = 1;
    AlgElem p = apply(g, e);
    for (std::size_t i = 0; i < impl_->dim; ++i) m(i, k) = p.coords[i];
  }
  return m;
}

std::string SplittingAlgebra::basis_label() const {
  std::string s = "zeta^i";
  if (impl_->rads.size() == 1) return s + "*alpha^j";
  for (std::size_t r = 0; r < impl_->rads.size(); ++r)
    s += "*alpha" + std::to_string(r + 1) + "^j" + std::to_string(r + 1);
  return s;
}

std::string SplittingAlgebra::format(const AlgElem& x) const {
  std::string out;
  for (std::size_t k = 0; k < impl_->dim; ++k) {
    const BigRational& c = x.coords[k];
    if (c == 0) continue;
    std::size_t i = k % impl_->phi, s = k / impl_->phi;
    std::vector<std::string> factors;
    if (i == 1) factors.push_back("zeta");
    if (i > 1) factors.push_back("zeta^" + std::to_string(i));
    auto j = slot_exponents(s);
    for (std::size_t r = 0; r < j.size(); ++r) {
      if (j[r] == 0) continue;
      std::string v = impl_->rads.size() == 1 ? "a" : "a" + std::to_string(r + 1);
      factors.push_back(j[r] == 1 ? v : v + "^" + std::to_string(j[r]));
    }
    BigRational mag = abs(c);
    std::string term;
    if (factors.empty()) {
      term = to_string(mag);
    } else {
      if (mag != 1) term = (mag.get_den() == 1 ? to_string(mag) : "(" + to_string(mag) + ")") + "*";
      for (std::size_t f = 0; f < factors.size(); ++f) term += (f ? "*" : "") + factors[f];
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? "-" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

SplittingAlgebra make_algebra(const RadicalDescriptor& d) {
  make_descriptor(d.n, d.a);
  return SplittingAlgebra(d.n, {d});
}

const char* verdict_name(FieldVerdict v) {
  switch (v) {
    case FieldVerdict::Field: return "Field";
    case FieldVerdict::NotField: return "NotField";
    case FieldVerdict::Indeterminate: return "Indeterminate";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Operations

AlgElem elem_invert(const SplittingAlgebra& A, const AlgElem& x) {
  if (x.is_zero()) throw Error(Errc::NotInvertible, "zero is not invertible");
  try {
    return AlgElem{solve(A.mult_matrix(x), A.one().coords)};
  } catch (const Error& e) {
    if (e.code() == Errc::SingularMatrix) throw Error(Errc::NotInvertible, "element is a zero divisor");
    throw;
  }
}

AlgElem apply_automorphism(const SplittingAlgebra& A, const Automorphism& g, const AlgElem& x) {
  return A.apply(g, x);
}

QPoly minimal_poly(const SplittingAlgebra& A, const AlgElem& x) {
  // Incremental elimination on 1, x, x^2, ... tracking each reduced row as a
  // polynomial in x; the first power that reduces to zero yields the answer.
  std::size_t dim = A.dim();
  std::vector<std::vector<BigRational>> rows, combos;
  std::vector<std::size_t> pivots;
  AlgElem p = A.one();
  for (std::size_t k = 0; k <= dim; ++k) {
    std::vector<BigRational> v = p.coords;
    std::vector<BigRational> c(k + 1);
    c[k] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const BigRational& t = v[pivots[r]];
      if (t == 0) continue;
      BigRational f = t / rows[r][pivots[r]];
      for (std::size_t q = 0; q < dim; ++q)
        if (rows[r][q] != 0) v[q] -= f * rows[r][q];
      for (std::size_t q = 0; q < combos[r].size(); ++q) c[q] -= f * combos[r][q];
    }
    std::size_t piv = 0;
    while (piv < dim && v[piv] == 0) ++piv;
    if (piv == dim) return QPoly(std::move(c)).monic();
    rows.push_back(std::move(v));
    combos.push_back(std::move(c));
    pivots.push_back(piv);
    p = A.mul(p, x);
  }
  throw Error(Errc::Internal, "minimal polynomial exceeds algebra dimension");
}

namespace {

constexpr std::size_t kPrimitiveRouteMaxDim = 60;

AlgElem poly_at(const SplittingAlgebra& A, const QPoly& f, const AlgElem& x) {
  AlgElem r = A.zero();
  for (long k = f.degree(); k >= 0; --k) r = A.mul(r, x) + A.rational(f.coeff(static_cast<std::size_t>(k)));
  return r;
}

AlgElem primitive_candidate(const SplittingAlgebra& A, unsigned long c) {
  AlgElem theta = A.zeta();
  BigRational w = c;
  for (std::size_t r = 0; r < A.radicals().size(); ++r) {
    theta = theta + w * A.alpha(r);
    w *= c;
  }
  return theta;
}

FieldCertificate certify_primitive(const SplittingAlgebra& A) {
  // Search for theta with deg(minpoly) = dim; then A = Q[x]/(minpoly) and A is
  // a field iff minpoly is irreducible. A candidate of lower degree whose
  // minimal polynomial splits already exhibits a zero divisor; it is kept as
  // a fallback witness.
  FieldCertificate fallback;
  std::size_t dim = A.dim();
  unsigned long cmax = static_cast<unsigned long>(std::max<std::size_t>(1, dim * dim));
  for (unsigned long c = 1; c <= cmax; ++c) {
    AlgElem theta = primitive_candidate(A, c);
    QPoly mu = minimal_poly(A, theta);
    bool full = static_cast<std::size_t>(mu.degree()) == dim;
    if (!full && fallback.verdict == FieldVerdict::NotField) continue;
    auto fac = poly_factor(mu);
    if (!full && fac.size() == 1) continue;
    FieldCertificate cert;
    cert.route = "primitive_element";
    cert.c = c;
    cert.minpoly = mu;
    for (auto& [f, e] : fac) cert.factors.push_back(f);
    cert.verdict = (full && fac.size() == 1) ? FieldVerdict::Field : FieldVerdict::NotField;
    if (fac.size() > 1) cert.zero_divisor = poly_at(A, fac[0].first, theta);
    if (full) return cert;
    fallback = std::move(cert);
  }
  if (fallback.verdict == FieldVerdict::Indeterminate) fallback.route = "primitive_element";
  return fallback;
}

}  // namespace

FieldCertificate certify_field(const SplittingAlgebra& A) {
  if (A.dim() > kPrimitiveRouteMaxDim) {
    // Every component has degree divisible by the dimension of each
    // sub-algebra that is itself a field; if their lcm reaches dim, A has a
    // single component.
    std::size_t k = A.radicals().size();
    std::size_t lcm_deg = 1;
    std::vector<std::size_t> subs;
    for (unsigned mask = 0; mask < (1u << (k + 1)); ++mask) {
      if (mask == (1u << (k + 1)) - 1) continue;
      std::vector<RadicalDescriptor> rs;
      for (std::size_t r = 0; r < k; ++r)
        if (mask & (1u << r)) rs.push_back(A.radicals()[r]);
      unsigned long m = (mask & (1u << k)) ? A.cyclo_order() : 1;
      SplittingAlgebra sub(m, rs);
      if (sub.dim() <= 1) continue;
      bool field = false;
      if (rs.empty())
        field = true;  // cyclotomic field
      else if (rs.size() == 1 && m == 1)
        field = radical_irreducible(rs[0].n, rs[0].a);
      else
        field = certify_field(sub).verdict == FieldVerdict::Field;
      if (field) {
        lcm_deg = lcm_u(lcm_deg, sub.dim());
        subs.push_back(sub.dim());
      }
    }
    if (lcm_deg == A.dim()) {
      FieldCertificate cert;
      cert.verdict = FieldVerdict::Field;
      cert.route = "degree_lcm";
      std::sort(subs.begin(), subs.end());
      subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
      cert.sub_degrees = subs;
      return cert;
    }
  }
  return certify_primitive(A);
}

bool member_subfield(const SplittingAlgebra& A, const AlgElem& x, Subfield which) {
  std::size_t phi = A.phi();
  for (std::size_t k = 0; k < x.coords.size(); ++k) {
    if (x.coords[k] == 0) continue;
    std::size_t i = k % phi, s = k / phi;
    switch (which) {
      case Subfield::K:
        if (k != 0) return false;
        break;
      case Subfield::L:
        if (i != 0) return false;
        break;
      case Subfield::M:
        if (s != 0) return false;
        break;
    }
  }
  return true;
}

std::size_t compositum_degree(unsigned long m, unsigned long n, const BigRational& a) {
  make_descriptor(n, a);
  SplittingAlgebra A(m, {{n, a}});
  auto cert = certify_field(A);
  if (cert.verdict == FieldVerdict::Field) return A.dim();
  if (cert.verdict == FieldVerdict::Indeterminate || cert.factors.empty() ||
      static_cast<std::size_t>(cert.minpoly.degree()) != A.dim())
    throw Error(Errc::Indeterminate, "no primitive element certified");
  // A = Q[x]/(minpoly); all components are conjugate, so factor degrees agree.
  long d = cert.factors[0].degree();
  for (auto& f : cert.factors)
    if (f.degree() != d) throw Error(Errc::Internal, "unequal component degrees");
  return static_cast<std::size_t>(d);
}

SplittingAlgebra make_field(unsigned long m, const std::vector<RadicalDescriptor>& radicals) {
  for (auto& d : radicals) make_descriptor(d.n, d.a);
  SplittingAlgebra A(m, radicals);
  auto cert = certify_field(A);
  if (cert.verdict != FieldVerdict::Field)
    throw Error(Errc::NotAField, std::string("splitting algebra is not certified as a field: ") +
                                     verdict_name(cert.verdict));
  return A.with_certificate(cert);
}

AlgElem embed(const SplittingAlgebra& from, const SplittingAlgebra& to,
              const std::vector<std::size_t>& radical_map, const AlgElem& x) {
  unsigned long mf = from.cyclo_order(), mt = to.cyclo_order();
  if (mt % mf != 0) throw Error(Errc::Internal, "cyclotomic orders incompatible for embedding");
  if (radical_map.size() != from.radicals().size()) throw Error(Errc::Internal, "radical map arity");
  for (std::size_t r = 0; r < radical_map.size(); ++r)
    if (!(from.radicals()[r] == to.radicals().at(radical_map[r])))
      throw Error(Errc::Internal, "radical map mismatch");
  AlgElem out = to.zero();
  std::size_t phf = from.phi(), pht = to.phi();
  for (std::size_t k = 0; k < x.coords.size(); ++k) {
    if (x.coords[k] == 0) continue;
    std::size_t i = k % phf, s = k / phf;
    auto jf = from.slot_exponents(s);
    std::vector<unsigned long> jt(to.radicals().size(), 0);
    for (std::size_t r = 0; r < jf.size(); ++r) jt[radical_map[r]] = jf[r];
    std::size_t st = to.slot_of(jt);
    AlgElem z = to.zeta_pow(static_cast<unsigned long>(i) * (mt / mf));
    for (std::size_t q = 0; q < pht; ++q)
      if (z.coords[q] != 0) out.coords[st * pht + q] += x.coords[k] * z.coords[q];
  }
  return out;
}

}  // namespace radix
