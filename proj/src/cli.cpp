#include "radix/cli.hpp"

#include <sstream>

#include "radix/errors.hpp"
#include "radix/integral.hpp"
#include "radix/padic.hpp"

namespace radix {

using json = nlohmann::ordered_json;

namespace {

json jrat(const BigRational& q) { return to_string(q); }

json jmat(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(jrat(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json jvec(const std::vector<BigRational>& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(jrat(x));
  return a;
}

json jelem(const SplittingAlgebra& A, const AlgElem& x) {
  json coords = json::array();
  for (std::size_t k = 0; k < x.coords.size(); ++k) {
    if (x.coords[k] == 0) continue;
    json entry = json::array({std::to_string(k % A.phi())});
    for (auto j : A.slot_exponents(k / A.phi())) entry.push_back(std::to_string(j));
    entry.push_back(jrat(x.coords[k]));
    coords.push_back(entry);
  }
  return json{{"basis", A.basis_label()}, {"coords", coords}, {"text", A.format(x)}};
}

json jperm(const Perm& p) { return json(p); }

json jdescriptor(const RadicalDescriptor& d) { return json{{"n", d.n}, {"a", jrat(d.a)}}; }

json jgroup_ring(const HopfStructure& H, const GroupRingElem& h) {
  json terms = json::array();
  for (std::size_t e = 0; e < h.size(); ++e)
    if (!h[e].is_zero()) terms.push_back(json{{"eta", jperm(H.subgroup().elements()[e])}, {"coefficient", H.algebra().format(h[e])}});
  return terms;
}

json jhopf(const HopfStructure& H) {
  json basis = json::array();
  for (auto& w : H.basis()) basis.push_back(jgroup_ring(H, w));
  json elems = json::array();
  for (auto& e : H.subgroup().elements()) elems.push_back(jperm(e));
  json out;
  json desc = json::array();
  for (auto& d : H.algebra().radicals()) desc.push_back(jdescriptor(d));
  out["descriptor"] = desc;
  out["subgroup"] = elems;
  out["basis"] = basis;
  out["counit"] = jvec(H.counit());
  return out;
}

json jorder(const AssocOrderBasis& O) {
  json basis = json::array();
  for (auto& v : O.basis) basis.push_back(jvec(v));
  return json{{"basis", basis}, {"lattice_hnf", jmat(O.key.hnf)}, {"clearing_factor", to_string(O.key.denominator)}};
}

json jfield(const FieldCertificate& c, const SplittingAlgebra& A) {
  json out{{"verdict", verdict_name(c.verdict)}, {"route", c.route}};
  if (c.route == "primitive_element") {
    out["c"] = c.c;
    out["minpoly"] = c.minpoly.to_string();
  }
  if (!c.sub_degrees.empty()) out["sub_degrees"] = c.sub_degrees;
  if (c.zero_divisor) out["zero_divisor"] = A.format(*c.zero_divisor);
  return out;
}

json jkummer(const KummerCertificate& k, const SplittingAlgebra& A) {
  json gens = json::array(), eig = json::array(), basis = json::array();
  for (auto& g : k.generators) gens.push_back(A.format(g));
  for (auto& e : k.generator_eigenvalues) eig.push_back(jvec(e));
  for (auto& b : k.eigen_basis) basis.push_back(A.format(b));
  return json{{"exponent", k.exponent},
              {"complement", k.complement},
              {"generators", gens},
              {"generator_eigenvalues", eig},
              {"eigen_basis", basis},
              {"almost_cyclic", k.almost_cyclic},
              {"almost_kummer", k.almost_kummer},
              {"h_cyclic", k.h_cyclic},
              {"h_kummer", k.h_kummer},
              {"strongly_decomposable", k.strongly_decomposable}};
}

json jstrong(const StrongDisjointReport& r) {
  return json{{"disjoint", r.disjoint},         {"route", r.route},
              {"witness", r.witness},           {"degree_l1m2", r.degree_l1m2},
              {"degree_l2m1", r.degree_l2m1},   {"degree_l1l2", r.degree_l1l2}};
}

json jrank(const RadicalClassGroup& g) {
  json eq = json::array();
  for (auto& e : g.equivalences) eq.push_back(json{{"i", e.i}, {"j", e.j}, {"r", e.r}, {"c", jrat(e.c)}});
  return json{{"exponent", g.exponent}, {"generators", jvec(g.generators)}, {"columns", g.columns},
              {"exponent_matrix", jmat(g.exponent_matrix)}, {"rank", g.rank}, {"equivalences", eq}};
}

json jfree(const FreenessCertificate& c, const SplittingAlgebra& A) {
  json out{{"verdict", c.verdict == "free_with_generator" ? "free" : c.verdict}, {"certificate", c.verdict}};
  if (c.generator) out["generator"] = A.format(*c.generator);
  if (!c.route.empty()) out["route"] = c.route;
  if (!c.reason.empty()) out["reason"] = c.reason;
  return out;
}

// Certified-negative outcome: exit 2 with a witness.
struct Negative {
  json witness;
};

const RadicalDescriptor& single(const JobSpec& job) {
  if (job.radicals.size() != 1) throw Error(Errc::Parse, "this command takes exactly one --n/--a pair");
  return job.radicals[0];
}

SplittingAlgebra field_or_negative(const RadicalDescriptor& d, json& report) {
  SplittingAlgebra A = make_algebra(make_descriptor(d.n, d.a));
  FieldCertificate c = certify_field(A);
  report["field"] = jfield(c, A);
  if (c.verdict != FieldVerdict::Field)
    throw Negative{json{{"code", "NotAField"}, {"message", "splitting algebra is not a field"}}};
  return A.with_certificate(c);
}

void analyze_single(const JobSpec& job, json& report) {
  const RadicalDescriptor& d = single(job);
  report["input"] = jdescriptor(d);
  SplittingAlgebra A = field_or_negative(d, report);
  auto gd = radical_galois_group(A);
  report["galois_group_order"] = gd->group().order();
  report["coset_space_size"] = gd->cosets().size();
  HopfStructure H = cyclotomic_complement_structure(gd);
  if (gd->cosets().size() <= job.cap) {
    auto all = enumerate_structures(gd->cosets(), job.cap);
    json list = json::array();
    for (auto& N : all) {
      auto v = almost_classical_test(gd->cosets(), N);
      list.push_back(json{{"abelian", N.is_abelian()},
                          {"almost_classical", v.almost_classical},
                          {"complement", complement_label(*gd, v)}});
    }
    report["structures"] = all.size();
    report["structure_list"] = list;
  } else {
    report["structures"] = nullptr;
    report["enumeration"] = "skipped: coset space exceeds the cap of " + std::to_string(job.cap);
  }
  auto v = almost_classical_test(gd->cosets(), H.subgroup());
  report["almost_classical"] = v.almost_classical;
  report["complement"] = complement_label(*gd, v);
  KummerCertificate k = h_kummer_certify(H, {A.alpha()});
  report["h_cyclic"] = k.h_cyclic;
  report["h_kummer"] = k.h_kummer;
  report["kummer"] = jkummer(k, A);
  report["hopf_algebra"] = jhopf(H);
}

void analyze_multi(const JobSpec& job, json& report) {
  unsigned long n = 1;
  for (auto& d : job.radicals) n = lcm_u(n, d.n);
  if (job.exponent) n = *job.exponent;
  json in = json::array();
  for (auto& d : job.radicals) in.push_back(jdescriptor(d));
  report["input"] = json{{"n", n}, {"radicals", in}};
  std::vector<BigRational> rads;
  for (auto& d : job.radicals) rads.push_back(d.a);
  report["rank"] = radical_group_rank(n, rads).rank;
  try {
    Theorem1Result r = theorem1_certify(n, job.radicals);
    report["almost_classical"] = true;
    report["complement"] = r.certificate.complement;
    report["almost_kummer"] = r.certificate.almost_kummer;
    report["h_kummer"] = r.certificate.h_kummer;
    report["kummer"] = jkummer(r.certificate, r.structure.algebra());
  } catch (const Error& e) {
    if (e.code() == Errc::NotStronglyDisjoint || e.code() == Errc::ComplementIntersects ||
        e.code() == Errc::NotMinimalExponent)
      throw Negative{json{{"code", errc_name(e.code())}, {"message", e.what()}}};
    throw;
  }
}

void enumerate_cmd(const JobSpec& job, json& report) {
  const RadicalDescriptor& d = single(job);
  report["input"] = jdescriptor(d);
  SplittingAlgebra A = field_or_negative(d, report);
  auto gd = radical_galois_group(A);
  auto all = enumerate_structures(gd->cosets(), job.cap);
  json list = json::array();
  for (auto& N : all) {
    auto v = almost_classical_test(gd->cosets(), N);
    json elems = json::array();
    for (auto& e : N.elements()) elems.push_back(jperm(e));
    json opp = json::array();
    RegularSubgroup No = opposite(N);
    for (auto& e : No.elements()) opp.push_back(jperm(e));
    list.push_back(json{{"elements", elems},
                        {"abelian", N.is_abelian()},
                        {"opposite", opp},
                        {"almost_classical", v.almost_classical},
                        {"complement", complement_label(*gd, v)}});
  }
  report["structures"] = all.size();
  report["structure_list"] = list;
}

struct SingleSetup {
  SplittingAlgebra A;
  HopfStructure H;
  IntegralBasis B;
};

SingleSetup single_setup(const JobSpec& job, json& report) {
  const RadicalDescriptor& d = single(job);
  report["input"] = jdescriptor(d);
  SplittingAlgebra A = field_or_negative(d, report);
  HopfStructure H = cyclotomic_complement_structure(radical_galois_group(A));
  report["hopf_algebra"] = jhopf(H);
  IntegralBasis B;
  try {
    B = monogenic_radical(A);
  } catch (const Error& e) {
    if (e.code() != Errc::NotCertified) throw;
    throw Negative{json{{"code", "NotCertified"}, {"message", e.what()}}};
  }
  json bj = json::array();
  for (auto& g : B.elements) bj.push_back(A.format(g));
  report["integral_basis"] = json{{"elements", bj}, {"certification", B.certification}};
  return {A, H, B};
}

void assoc_order_cmd(const JobSpec& job, json& report) {
  SingleSetup s = single_setup(job, report);
  std::optional<AssocOrderBasis> hnf, eig;
  if (job.basis == "hnf" || job.basis == "both") {
    ActionMatrix M = matrix_of_action(s.H, s.B);
    ReducedMatrix R = reduced_matrix(M);
    hnf = assoc_order_hnf(M);
    report["hnf"] = jorder(*hnf);
    report["hnf"]["reduced_matrix"] = jmat(R.D);
  }
  if (job.basis == "eigen" || job.basis == "both") {
    EigenvalueMatrix E = eigen_matrix(s.H, s.B.elements);
    EigenOrder eo = assoc_order_eigen(s.H, E);
    eig = eo.order;
    report["eigen"] = jorder(eo.order);
    report["eigen"]["lambda"] = jmat(E.lambda);
    report["eigen"]["omega"] = jmat(E.omega);
    report["eigen"]["idempotents"] = json{{"idempotent", eo.report.idempotent},
                                          {"orthogonal", eo.report.orthogonal},
                                          {"sums_to_one", eo.report.sums_to_one}};
  }
  if (hnf && eig) report["paths_agree"] = hnf->key == eig->key;
}

void freeness_single(const JobSpec& job, json& report) {
  SingleSetup s = single_setup(job, report);
  EigenvalueMatrix E = eigen_matrix(s.H, s.B.elements);
  FreenessCertificate c = freeness_certify(s.H, s.B, E);
  json f = jfree(c, s.A);
  for (auto& [k, v] : f.items()) report[k] = v;
  if (job.basis == "both") {
    AssocOrderBasis h = assoc_order_hnf(matrix_of_action(s.H, s.B));
    report["paths_agree"] = h.key == assoc_order_eigen(s.H, E).order.key;
  }
}

struct PairSetup {
  HopfStructure H1, H2;
};

PairSetup pair_setup(const JobSpec& job, json& report) {
  if (job.radicals.size() != 2) throw Error(Errc::Parse, "this command takes exactly two --n/--a pairs");
  json in = json::array();
  for (auto& d : job.radicals) in.push_back(jdescriptor(d));
  report["input"] = in;
  StrongDisjointReport sd = strong_disjoint_test(job.radicals[0], job.radicals[1]);
  report["strong_disjointness"] = jstrong(sd);
  if (!sd.disjoint)
    throw Negative{json{{"code", "NotStronglyDisjoint"}, {"message", sd.witness}}};
  auto factor = [&](const RadicalDescriptor& d) {
    SplittingAlgebra A = make_algebra(make_descriptor(d.n, d.a));
    FieldCertificate c = certify_field(A);
    if (c.verdict != FieldVerdict::Field)
      throw Negative{json{{"code", "NotAField"}, {"message", "factor algebra is not a field"}}};
    return cyclotomic_complement_structure(radical_galois_group(A.with_certificate(c)));
  };
  return {factor(job.radicals[0]), factor(job.radicals[1])};
}

void freeness_pair(const JobSpec& job, json& report) {
  PairSetup s = pair_setup(job, report);
  HopfStructure H = product_structure(s.H1, s.H2);
  FreenessCertificate c = freeness_certify_tensor(s.H1, s.H2, H);
  json f = jfree(c, H.algebra());
  for (auto& [k, v] : f.items()) report[k] = v;
}

void product_cmd(const JobSpec& job, json& report) {
  PairSetup s = pair_setup(job, report);
  HopfStructure H = [&] {
    try {
      return product_structure(s.H1, s.H2);
    } catch (const Error& e) {
      if (e.code() == Errc::NotDisjoint || e.code() == Errc::NotProductStructure)
        throw Negative{json{{"code", errc_name(e.code())}, {"message", e.what()}}};
      throw;
    }
  }();
  auto v = almost_classical_test(H.galois().cosets(), H.subgroup());
  report["product_order"] = H.subgroup().size();
  report["almost_classical"] = v.almost_classical;
  report["complement"] = complement_label(H.galois(), v);
  json tensor;
  const RadicalDescriptor &d1 = job.radicals[0], &d2 = job.radicals[1];
  tensor["disc1"] = jrat(disc_radical(d1));
  tensor["disc2"] = jrat(disc_radical(d2));
  if (gassert_condition(d1) && gassert_condition(d2)) {
    IntegralBasis B1 = monogenic_radical(s.H1.algebra()), B2 = monogenic_radical(s.H2.algebra());
    try {
      IntegralBasis B = product_integral_basis(H.algebra(), s.H1.algebra(), B1, s.H2.algebra(), B2);
      TensorReport t = arith_disjoint_tensor(s.H1, B1, s.H2, B2, H, B);
      tensor["coprime_discriminants"] = t.coprime_discriminants;
      tensor["arithmetically_disjoint"] = t.arithmetically_disjoint;
      tensor["kronecker_ok"] = t.kronecker_ok;
      tensor["row_permutation"] = t.row_permutation;
      tensor["lattice_equal"] = t.lattice_equal;
      tensor["reduced_tensor_ok"] = t.reduced_tensor_ok;
    } catch (const Error& e) {
      if (e.code() != Errc::NotCertified) throw;
      tensor["coprime_discriminants"] = false;
      tensor["arithmetically_disjoint"] = false;
    }
  } else {
    tensor["arithmetically_disjoint"] = false;
    tensor["reason"] = "a factor is not certified monogenic";
  }
  report["tensor"] = tensor;
  json f = jfree(freeness_certify_tensor(s.H1, s.H2, H), H.algebra());
  report["freeness"] = f;
}

void padic_cmd(const JobSpec& job, json& report) {
  const RadicalDescriptor& d = single(job);
  if (!job.p) throw Error(Errc::Parse, "padic needs --p");
  PadicRadical x = make_padic(*job.p, d.n, d.a);
  RamificationReport r = ramification_classify(x);
  report["p"] = to_string(x.p);
  report["n"] = x.n;
  report["a"] = jrat(x.a);
  report["v"] = x.v;
  report["tame"] = r.tame;
  report["totally_ramified"] = r.totally_ramified;
  report["eisenstein"] = r.eisenstein ? json(jrat(*r.eisenstein)) : json(nullptr);
  report["jump_bound"] = r.jump_bound ? json(jrat(*r.jump_bound)) : json(nullptr);
  report["max_ramified"] = r.max_ramified ? json(*r.max_ramified) : json(nullptr);
  report["verdict"] = r.verdict;
  report["route"] = r.route.empty() ? json(nullptr) : json(r.route);
  if (!r.reason.empty()) report["reason"] = r.reason;
}

void rank_cmd(const JobSpec& job, json& report) {
  unsigned long n = job.exponent ? *job.exponent : (job.radicals.size() == 1 ? job.radicals[0].n : 0);
  if (n == 0) throw Error(Errc::Parse, "rank needs --n");
  std::vector<BigRational> rads = job.radicands;
  if (rads.empty()) throw Error(Errc::Parse, "rank needs --radicands");
  RadicalClassGroup g = radical_group_rank(n, rads);
  report["input"] = json{{"n", n}, {"radicands", jvec(rads)}};
  report["rank"] = g.rank;
  report["class_group"] = jrank(g);
}

}  // namespace

RunResult run_job(const JobSpec& job) {
  RunResult res;
  json& report = res.report;
  report["schema"] = kSchema;
  report["command"] = job.command;
  try {
    if (job.cap < 1 || job.cap > kHardEnumerationCap)
      throw Error(Errc::Parse, "cap must lie in [1, " + std::to_string(kHardEnumerationCap) + "]");
    if (job.command == "analyze") {
      if (job.radicals.size() == 1 && job.radicands.empty())
        analyze_single(job, report);
      else {
        JobSpec j = job;
        for (auto& a : job.radicands) {
          if (!job.exponent) throw Error(Errc::Parse, "--radicands needs --n");
          j.radicals.push_back({*job.exponent, a});
        }
        if (j.radicals.empty()) throw Error(Errc::Parse, "analyze needs radicals");
        analyze_multi(j, report);
      }
    } else if (job.command == "enumerate") {
      enumerate_cmd(job, report);
    } else if (job.command == "assoc-order") {
      assoc_order_cmd(job, report);
    } else if (job.command == "freeness") {
      if (job.radicals.size() == 2)
        freeness_pair(job, report);
      else
        freeness_single(job, report);
    } else if (job.command == "product") {
      product_cmd(job, report);
    } else if (job.command == "padic") {
      padic_cmd(job, report);
    } else if (job.command == "rank") {
      rank_cmd(job, report);
    } else {
      throw Error(Errc::Parse, "unknown command " + job.command);
    }
  } catch (const Negative& n) {
    report["verdict"] = "negative";
    report["witness"] = n.witness;
    res.exit_code = 2;
  } catch (const Error& e) {
    report["error"] = json{{"code", errc_name(e.code())}, {"message", e.what()}};
    res.exit_code = 1;
  }
  return res;
}

namespace {

void flatten(const json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render(const json& report, const std::string& format) {
  if (format == "table") {
    std::ostringstream out;
    flatten(report, "", out);
    return out.str();
  }
  return report.dump(2) + "\n";
}

}  // namespace radix
