#include "prymcheck/suites.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "prymcheck/bounds.hpp"
#include "prymcheck/characters.hpp"
#include "prymcheck/curves.hpp"
#include "prymcheck/dickson.hpp"
#include "prymcheck/galrep.hpp"
#include "prymcheck/parallel.hpp"
#include "prymcheck/periods.hpp"

namespace prymcheck {

using json = nlohmann::json;

namespace {

FieldPtr field_of(std::uint32_t q) {
  const auto pf = prime_factors(q);
  if (pf.size() != 1) throw ConfigError("field size " + std::to_string(q) + " is not a prime power");
  std::uint32_t k = 0;
  for (std::uint64_t r = q; r > 1; r /= pf[0]) ++k;
  return FqField::make(static_cast<std::uint32_t>(pf[0]), k);
}

std::vector<std::uint32_t> fields_or(const RunConfig& cfg, std::vector<std::uint32_t> dflt) {
  return cfg.fields.empty() ? dflt : cfg.fields;
}

Precision precision_of(const RunConfig& cfg) { return precision_from_bits(cfg.precision_bits); }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << x;
  return os.str();
}

std::string fmt_c(cd z) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("bad JSON in '" + path + "': " + e.what());
  }
}

// Lambda codes for one field according to cfg.lambda.
std::vector<Elem> lambda_set(const RunConfig& cfg, const FqField& F) {
  std::vector<Elem> out;
  if (cfg.lambda == "all") {
    for (Elem x = 2; x < F.q(); ++x) out.push_back(x);
  } else if (cfg.lambda == "random") {
    std::vector<Elem> pool;
    for (Elem x = 2; x < F.q(); ++x) pool.push_back(x);
    std::mt19937_64 rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * F.q()));
    const std::size_t n = std::min<std::size_t>(pool.size(), static_cast<std::size_t>(cfg.samples));
    for (std::size_t i = 0; i < n; ++i) std::swap(pool[i], pool[i + rng() % (pool.size() - i)]);
    out.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
    std::sort(out.begin(), out.end());
  } else {
    std::stringstream ss(cfg.lambda);
    for (std::string tok; std::getline(ss, tok, ',');) {
      const long long v = std::stoll(tok);
      const Elem x = F.k() == 1 ? F.from_int(v) : static_cast<Elem>(v);
      if (v < 0 || x >= F.q() || x == 0 || x == 1)
        throw ConfigError("lambda " + tok + " is not an element of F_" + std::to_string(F.q()) + " outside {0,1}");
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

RingMatrix parse_matrix(const FiniteLocalRing& R, const json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("matrix must be a non-empty array of rows");
  const int d = static_cast<int>(j.size());
  RingMatrix A(d);
  for (int i = 0; i < d; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != d) throw ConfigError("matrix must be square");
    for (int k = 0; k < d; ++k) {
      const auto& x = row[static_cast<std::size_t>(k)];
      try {
        if (x.is_number_integer()) A(i, k) = R.from_int(x.get<long long>());
        else if (x.is_string()) A(i, k) = R.parse_elem(x.get<std::string>());
        else throw ConfigError("matrix entries must be strings or integers");
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  }
  return A;
}

std::vector<RingMatrix> parse_matrix_list(const FiniteLocalRing& R, const json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("expected a non-empty list of matrices");
  std::vector<RingMatrix> out;
  for (const auto& m : j) out.push_back(parse_matrix(R, m));
  for (const auto& m : out)
    if (m.d != out.front().d) throw ConfigError("matrices of mixed size");
  return out;
}

std::vector<double> period_sample_points() {
  std::vector<double> xs;
  for (int i = 1; i <= 10; ++i) xs.push_back(0.085 * i - 0.035);  // 0.05 .. 0.815
  return xs;
}

std::vector<Row> suite_charsums(const RunConfig& cfg) {
  const auto qs = fields_or(cfg, {7, 13, 19, 31, 37, 43});
  auto per_field = parallel_map(qs.size(), cfg.jobs, [&](std::size_t i) {
    std::vector<Row> rows;
    const auto F = field_of(qs[i]);
    const json in = {{"q", qs[i]}};
    const auto hd = check_hasse_davenport(F);
    rows.push_back(make_row("charsums.hasse_davenport", in, "J(eta^2,eta^3) = eta^2(2) J(eta,eta^4)",
                            to_string(hd.j23) + " vs " + to_string(hd.eta2_of_2 * hd.j14), hd.exact_holds));
    std::size_t refl_fail = 0, six_fail = 0, total = 0;
    for (Elem x = 2; x < F->q(); ++x) {
      const auto r = check_prop9_reflection(F, x);
      ++total;
      refl_fail += !r.reflection_holds;
      six_fail += !r.sixth_power_holds;
    }
    const std::string checked = " of " + std::to_string(total) + " x";
    rows.push_back(make_row("charsums.reflection", in, "0 failures", std::to_string(refl_fail) + " failures" + checked,
                            refl_fail == 0));
    rows.push_back(make_row("charsums.sixth_power", in, "0 failures", std::to_string(six_fail) + " failures" + checked,
                            six_fail == 0));
    return rows;
  });
  std::vector<Row> out;
  for (auto& v : per_field) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Row> suite_traces(const RunConfig& cfg) {
  const auto qs = fields_or(cfg, {7, 13, 19, 31});
  const int unit = cfg.fhyp_unit.value_or(kTraceUnitExponent);
  struct Task {
    FieldPtr F;
    Elem lambda;
  };
  std::vector<Task> tasks;
  for (auto q : qs) {
    auto F = field_of(q);
    if (q % 6 != 1 || F->p() < 5) throw ConfigError("trace checks need q = 1 mod 6, got " + std::to_string(q));
    for (auto l : lambda_set(cfg, *F)) tasks.push_back({F, l});
  }
  return parallel_map(tasks.size(), cfg.jobs, [&](std::size_t i) {
    const auto& [F, lambda] = tasks[i];
    const bool naive = F->q() <= cfg.naive_limit;
    const TraceRow r = verify_trace_row(F, lambda, naive, unit);
    std::ostringstream actual;
    actual << "#X=" << r.count_X;
    if (naive) actual << " naive=" << r.count_X_naive;
    actual << " a_E=" << r.a_E << " t1=" << to_string(r.pair.t1) << " t2=" << to_string(r.pair.t2);
    const bool ok = r.additivity && r.conjugate && r.weil && r.naive_agrees;
    return make_row("traces.additivity", {{"q", F->q()}, {"lambda", lambda}},
                    "q+1-#X = a_E+t1+t2, t2 = conj(t1), Weil bounds" + std::string(naive ? ", naive count" : ""),
                    actual.str(), ok);
  });
}

std::vector<Row> suite_ca_points(const RunConfig& cfg) {
  const auto qs = fields_or(cfg, {7, 13, 31});
  const std::vector<long long> as = cfg.a_values.empty() ? std::vector<long long>{1, 2} : cfg.a_values;
  struct Task {
    std::uint32_t q;
    long long a;  // 0 marks the cover check
  };
  std::vector<Task> tasks;
  for (auto q : qs) {
    tasks.push_back({q, 0});
    for (auto a : as) tasks.push_back({q, a});
  }
  return parallel_map(tasks.size(), cfg.jobs, [&](std::size_t i) {
    const auto F = field_of(tasks[i].q);
    if (tasks[i].a == 0) {
      const auto c = check_cover_identity(F);
      return make_row("ca.cover", {{"q", tasks[i].q}}, "v^2 = 4u^6 + 1 at every point",
                      std::to_string(c.failures) + " failures of " + std::to_string(c.checked), c.ok());
    }
    const Elem a = F->from_int(tasks[i].a);
    if (a == 0) throw ConfigError("a must be nonzero in F_" + std::to_string(tasks[i].q));
    const auto r = check_sixth_power_criterion(CurveCa(F, a));
    std::ostringstream actual;
    actual << r.checked << " points checked, " << r.identity_failures << " identity, " << r.eta_failures << " eta, "
           << r.irrational_pairs << " irrational";
    if (r.checked == 0) actual << " (vacuous: no point with xy != 0 and lambda outside {0,1})";
    return make_row("ca.rationality", {{"q", tasks[i].q}, {"a", tasks[i].a}}, "trace pair rational at every point",
                    actual.str(), r.ok());
  });
}

std::vector<Row> suite_periods(const RunConfig& cfg) {
  const Precision prec = precision_of(cfg);
  const int tp = cfg.t_prime.value_or(kQmBranch);
  std::vector<Row> rows;
  const auto dr = check_diagonal_relations();
  rows.push_back(make_row("periods.diag_relations", json::object(), "both relations hold in Z[zeta6]",
                          std::string(dr.square_relation ? "square ok" : "square FAILS") +
                              (dr.cube_relation ? ", cube ok" : ", cube FAILS"),
                          dr.ok()));
  const double beta_err = std::abs(beta_identity_value(prec) - 2.0);
  rows.push_back(make_row("periods.beta_identity", json::object(), "2", "|value-2| = " + fmt(beta_err), beta_err <= 1e-10,
                          1e-10));

  const auto xs = period_sample_points();
  auto per_point = parallel_map(xs.size(), cfg.jobs, [&](std::size_t i) {
    std::vector<Row> r;
    const C1Point P = c1_point(cd(xs[i], 0));
    const json in = {{"X", xs[i]}};
    const auto pp = period_vectors_at(P, prec);
    r.push_back(make_row("periods.mu4_zero", in, "0", fmt_c(pp.mu.v[1]), pp.mu.v[1] == cd(0, 0)));
    const auto L = lattice_build(pp);
    r.push_back(make_row("periods.lattice_rank", in, "6", std::to_string(L.rank), L.rank == 6 && L.relations_ok));
    const auto PL = project_lattice(pp);
    const auto M = qm_matrix(P, tp, prec);
    const auto qr = check_qm_stabilizes(PL, M, 1e-7);
    r.push_back(make_row("periods.qm_pattern", in, "integer pattern (0,0,2,0),(0,0,2,-2),(1,0,0,0),(1,-1,0,0)",
                         "max deviation " + fmt(qr.max_pattern_error), qr.ok(), 1e-7));
    const auto quat = check_quaternion_relations(P, tp, prec);
    std::ostringstream qa;
    qa << "I^2+3: " << fmt(quat.i_squared_error) << ", M^2-2: " << fmt(quat.m_squared_error)
       << ", IM+MI: " << fmt(quat.anticommutator_error) << ", disc " << quat.discriminant;
    r.push_back(make_row("periods.quaternion", in, "I^2=-3, M^2=2, IM=-MI, disc 6", qa.str(), quat.ok(1e-10), 1e-10));
    return r;
  });
  for (auto& v : per_point) rows.insert(rows.end(), v.begin(), v.end());

  const int t = cfg.t.value_or(0);
  const std::vector<cd> lambdas{cd(0.3, 0), cd(-0.5, 0), cd(0.2, 0.4), cd(2.5, 0.5)};
  for (cd lam : lambdas) {
    const auto s = check_schwarz_ratios(lam, t, prec);
    rows.push_back(make_row("periods.schwarz_ratio", {{"lambda", fmt_c(lam)}, {"t", t}}, "nu/mu = k s(lambda)",
                            "errors " + fmt(s.error1) + ", " + fmt(s.error5), std::max(s.error1, s.error5) <= 1e-10,
                            1e-10));
  }

  const auto ext = check_extension_on_curve(prec);
  rows.push_back(make_row("periods.exponents", json::object(), "c-a-b in (1/3)Z for both triples",
                          ext.exponents_in_third_z ? "yes" : "no", ext.exponents_in_third_z));
  for (const auto& s : ext.sequences) {
    std::ostringstream a;
    a << "last change " << fmt(s.last_relative_change);
    if (s.predicted) a << ", limit error " << fmt(s.limit_error);
    if (s.max_second_difference >= 0) a << ", second difference " << fmt(s.max_second_difference);
    rows.push_back(make_row("periods.extension", {{"sequence", s.name}}, "stabilizes to 6 digits", a.str(), s.ok, 1e-6));
  }
  return rows;
}

std::vector<Row> suite_bounds(const RunConfig& cfg) {
  const auto value = isogeny_factor_height_bound(cfg.g, cfg.degk, cfg.h, cfg.dimb);
  // Independent double-precision evaluation of the same composition.
  const double G = cfg.dimb;
  const double m = std::max({cfg.h, std::log(static_cast<double>(cfg.degk)), 1.0});
  const double log10_kappa =
      1024 * G * G * G * (64 * G * G * std::log10(14 * G) + std::log10(static_cast<double>(cfg.degk)) + 2 * std::log10(m));
  const double pi = boost::math::constants::pi<double>();
  const double expected = cfg.h + 0.5 * log10_kappa * std::log(10.0) + G * std::log(2 * pi * pi) / 2;
  const double got = static_cast<double>(value);
  const double rel = std::abs(got - expected) / std::max(1.0, std::abs(expected));
  std::vector<Row> rows{make_row("bounds.isogeny_factor",
                                 {{"g", cfg.g}, {"degk", cfg.degk}, {"h", cfg.h}, {"dimb", cfg.dimb}},
                                 fmt_double(expected), fmt_double(got), rel <= 1e-9, 1e-9)};
  if (cfg.snowden) {
    const auto sc = snowden_constant_log(cfg.degk, *cfg.snowden);
    std::ostringstream a;
    a.precision(15);
    a << sc.value.to_string() << " (level " << sc.value.level() << "), log10((10^10)!) = " << sc.log10_base_factorial
      << ", Stirling error <= " << static_cast<double>(sc.stirling_error);
    // Level 1 iff S is nonempty; the base factorial alone otherwise.
    const bool ok = sc.value.level() == (cfg.snowden->empty() ? 0 : 1) &&
                    boost::multiprecision::isfinite(sc.value.value());
    rows.push_back(make_row("bounds.snowden", {{"degk", cfg.degk}, {"norms", *cfg.snowden}}, "finite tower value",
                            a.str(), ok));
  }
  return rows;
}

namespace {

RingMatrix mat2(const FiniteLocalRing& R, FiniteLocalRing::Elem a, FiniteLocalRing::Elem b, FiniteLocalRing::Elem c,
                FiniteLocalRing::Elem d) {
  (void)R;
  RingMatrix A(2);
  A.e = {a, b, c, d};
  return A;
}

struct StandardGroup {
  std::string name;
  RingPtr F;
  std::vector<RingMatrix> gens;
  DicksonTag expected;
  std::uint32_t q0 = 0;
};

std::vector<StandardGroup> standard_groups() {
  std::vector<StandardGroup> out;
  for (std::uint32_t q : {5u, 7u, 9u}) {
    auto F = FiniteLocalRing::parse("F_" + std::to_string(q));
    const auto one = F->from_int(1);
    std::vector<RingMatrix> sl{mat2(*F, one, one, 0, one), mat2(*F, one, 0, one, one)};
    if (F->f() > 1) sl.push_back(mat2(*F, one, F->residue_field()->generator(), 0, one));
    out.push_back({"SL2", F, sl, DicksonTag::ContainsSL2, q});
    auto gl = sl;
    gl.push_back(mat2(*F, F->residue_field()->generator(), 0, 0, one));
    out.push_back({"GL2", F, gl, DicksonTag::ContainsSL2, q});
  }
  auto F7 = FiniteLocalRing::parse("F_7");
  out.push_back({"Borel", F7, {mat2(*F7, 3, 0, 0, 1), mat2(*F7, 1, 1, 0, 1)}, DicksonTag::Reducible});
  out.push_back({"split torus normalizer", F7, {mat2(*F7, 3, 0, 0, 1), mat2(*F7, 1, 0, 0, 3), mat2(*F7, 0, 1, 1, 0)},
                 DicksonTag::Dihedral});
  return out;
}

}  // namespace

std::vector<Row> suite_galrep(const RunConfig& cfg) {
  std::vector<Row> rows;
  // Instances are drawn serially so they do not depend on the job count.
  const auto rings = instance_rings();
  std::mt19937_64 rng(cfg.seed);
  std::vector<FaltingsSerreInstance> inst;
  for (int i = 0; i < cfg.samples; ++i) inst.push_back(random_instance(rng, rings[static_cast<std::size_t>(i) % rings.size()]));
  auto fs = parallel_map(inst.size(), cfg.jobs, [&](std::size_t i) {
    const auto& I = inst[i];
    const auto r = trace_conclusion_check(I.rho, I.rho_p, I.frob_set);
    Row row = make_row("galrep.faltings_serre",
                       {{"instance", i},
                        {"ring", I.ring->name()},
                        {"kind", pair_kind_name(I.kind)},
                        {"order", I.group->size()},
                        {"set_size", I.frob_set.size()}},
                       "no counterexample", status_name(r.status), r.status != TraceStatus::Counterexample);
    if (r.status == TraceStatus::NotSpanning || r.status == TraceStatus::TracesDiffer) row.status = Status::Skip;
    return row;
  });
  rows.insert(rows.end(), fs.begin(), fs.end());

  {
    auto F5 = FiniteLocalRing::parse("F_5");
    const auto G = MatrixGroup::closure(F5, {mat2(*F5, 1, 1, 0, 1), mat2(*F5, 1, 0, 1, 1)});
    const auto D = commutator_subgroup_exhaustive(G);
    rows.push_back(make_row("galrep.sl2_perfect", {{"q", 5}}, "[G,G] = G, |G| = 120",
                            "|G| = " + std::to_string(G.size()) + ", |[G,G]| = " + std::to_string(D.size()),
                            G.size() == 120 && D.size() == 120));
  }
  const auto groups = standard_groups();
  auto dk = parallel_map(groups.size(), cfg.jobs, [&](std::size_t i) {
    const auto& g = groups[i];
    const auto c = dickson_classify(g.F, g.gens);
    const bool ok = c.tag == g.expected && (g.expected != DicksonTag::ContainsSL2 || c.q0 == g.q0);
    return make_row("galrep.dickson", {{"group", g.name}, {"q", g.F->size()}}, tag_name(g.expected) +
                        (g.q0 ? "(q0=" + std::to_string(g.q0) + ")" : ""),
                    c.to_string(), ok);
  });
  rows.insert(rows.end(), dk.begin(), dk.end());
  return rows;
}

std::vector<Row> suite_dickson(const RunConfig& cfg) {
  if (cfg.fields.size() != 1) throw ConfigError("dickson needs exactly one field size (--q)");
  RingPtr F;
  try {
    F = FiniteLocalRing::parse("F_" + std::to_string(cfg.fields.front()));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const json j = read_json_file(cfg.gens_file);
  const auto gens = parse_matrix_list(*F, j.is_object() ? j.at("generators") : j);
  const json in = {{"q", F->size()}, {"gens", cfg.gens_file}};
  const auto c = dickson_classify(F, gens);
  std::vector<Row> rows;
  std::ostringstream a;
  a << c.to_string() << ", |H| = " << c.order << ", |PH| = " << c.projective_order;
  rows.push_back(make_row("dickson.classify", in, "a Dickson class", a.str(), true));
  if (c.tag == DicksonTag::ContainsSL2) {
    const auto tw = taylor_wiles_check(F, gens);
    std::ostringstream b;
    b << "|H'| = " << tw.derived_order << (tw.perfect ? " perfect" : " not perfect") << ", |ker det| = "
      << tw.kernel_order << (tw.kernel_irreducible ? " irreducible" : " reducible");
    rows.push_back(make_row("dickson.taylor_wiles", in, "H' perfect, kernel absolutely irreducible", b.str(), tw.ok()));
  }
  return rows;
}

std::vector<Row> suite_faltings_serre(const RunConfig& cfg) {
  RingPtr R;
  try {
    R = FiniteLocalRing::parse(cfg.ring);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const json j = read_json_file(cfg.spec_file);
  if (!j.is_object() || !j.contains("rho") || !j.contains("rho_prime") || !j.contains("frob"))
    throw ConfigError("spec file needs keys rho, rho_prime and frob");
  const auto A = parse_matrix_list(*R, j["rho"]);
  const auto B = parse_matrix_list(*R, j["rho_prime"]);
  if (A.size() != B.size()) throw ConfigError("rho and rho_prime need the same number of generator images");
  std::vector<RingMatrix> big;
  for (std::size_t i = 0; i < A.size(); ++i) big.push_back(block_diagonal(A[i], B[i]));
  auto G = std::make_shared<const MatrixGroup>(MatrixGroup::closure(R, big));
  const auto rho = GroupRep::block_projection(G, 0, A.front().d);
  const auto rho_p = GroupRep::block_projection(G, A.front().d, B.front().d);
  std::vector<std::size_t> frob;
  for (const auto& w : j["frob"]) {
    RingMatrix P = identity_matrix(G->dim());
    for (const auto& k : w) {
      const auto idx = k.get<std::size_t>();
      if (idx >= big.size()) throw ConfigError("frob word uses generator " + std::to_string(idx));
      P = mat_mul(*R, P, big[idx]);
    }
    frob.push_back(*G->find(P));
  }
  const auto r = trace_conclusion_check(rho, rho_p, frob);
  std::ostringstream a;
  a << status_name(r.status) << ", |G| = " << G->size() << ", span log-size " << r.certificate.frob.log_size << "/"
    << r.certificate.full.log_size << ", basis size " << r.certificate.basis.size();
  Row row = make_row("faltings_serre.check", {{"ring", R->name()}, {"spec", cfg.spec_file}}, "no counterexample",
                     a.str(), r.status != TraceStatus::Counterexample);
  if (r.status == TraceStatus::NotSpanning || r.status == TraceStatus::TracesDiffer) row.status = Status::Skip;
  return {row};
}

std::vector<Row> suite_calibrate(const RunConfig& cfg) {
  std::vector<Row> rows;
  std::vector<FieldPtr> fields;
  for (std::uint32_t q : {7u, 13u, 19u}) fields.push_back(field_of(q));

  int unit = 0;
  if (cfg.fhyp_unit) {
    unit = *cfg.fhyp_unit;
    bool ok = true;
    for (const auto& F : fields)
      for (Elem l = 2; l < F->q(); ++l) ok = ok && verify_trace_row(F, l, false, unit).additivity;
    rows.push_back(make_row("calibrate.fhyp_unit", {{"mode", "verify"}}, std::to_string(unit),
                            ok ? "holds on q = 7, 13, 19" : "additivity fails", ok));
  } else {
    const auto u = calibrate_trace_unit(fields);
    unit = u.value_or(-1);
    rows.push_back(make_row("calibrate.fhyp_unit", {{"mode", "search"}}, "unique exponent",
                            u ? std::to_string(*u) : "none or several", u.has_value()));
  }

  const C1Point P = c1_point(cd(0.5, 0));
  int tp = -1;
  if (cfg.t_prime) {
    tp = *cfg.t_prime;
    const auto qr = check_qm_stabilizes(project_lattice(period_vectors_at(P)), qm_matrix(P, tp));
    rows.push_back(make_row("calibrate.t_prime", {{"mode", "verify"}}, std::to_string(tp),
                            "pattern error " + fmt(qr.max_pattern_error), qr.ok(), 1e-7));
  } else {
    const auto c = calibrate_t_prime(P);
    tp = c.t_prime.value_or(-1);
    rows.push_back(make_row("calibrate.t_prime", {{"mode", "search"}}, "unique branch",
                            c.t_prime ? std::to_string(*c.t_prime) : "none or several", c.t_prime.has_value()));
  }

  const int t_found = sixth_root_branch(std::pow(cd(0.5, 0), 6), cd(0.5, 0));
  const int t = cfg.t.value_or(t_found);
  rows.push_back(make_row("calibrate.t", {{"mode", cfg.t ? "verify" : "search"}}, std::to_string(t_found),
                          std::to_string(t), t == t_found));

  if (!cfg.write_config.empty()) {
    std::ofstream out(cfg.write_config, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + cfg.write_config + "'");
    out << "# calibration values; pass with --config to verify instead of search\n"
        << "t = " << t << "\nt_prime = " << tp << "\nfhyp_unit = " << unit << "\n";
  }
  return rows;
}

Report run_suites(const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.config = cfg.to_json();
  for (Suite s : cfg.suites) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Row> rows;
    switch (s) {
      case Suite::Charsums: rows = suite_charsums(cfg); break;
      case Suite::Traces: rows = suite_traces(cfg); break;
      case Suite::CaPoints: rows = suite_ca_points(cfg); break;
      case Suite::Periods: rows = suite_periods(cfg); break;
      case Suite::Bounds: rows = suite_bounds(cfg); break;
      case Suite::Galrep: rows = suite_galrep(cfg); break;
      case Suite::Dickson: rows = suite_dickson(cfg); break;
      case Suite::FaltingsSerre: rows = suite_faltings_serre(cfg); break;
      case Suite::Calibrate: rows = suite_calibrate(cfg); break;
    }
    rep.append(std::move(rows));
    rep.timings[suite_name(s)] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  rep.sort_rows();
  return rep;
}

}  // namespace prymcheck
