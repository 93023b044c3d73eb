#include "fga/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include <omp.h>

namespace fga::pipeline {

using galg::AlgebraElement;
using groups::FiniteGroup;
using groups::Subgroup;

namespace {

int thread_count(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

json subgroup_json(const Subgroup& s) { return s.elements(); }

json check_json(const verify::Report& r) {
  json arr = json::array();
  for (const auto& c : r.checks) {
    json o{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) o["detail"] = c.detail;
    arr.push_back(std::move(o));
  }
  return arr;
}

json digits_json(const ff::SmallField& f, galg::Code c) { return f.digits(c); }

json witness_json(const construct::CaseWitness& w, const ff::SmallField& f) {
  json j{{"case", construct::to_string(w.tag)},
         {"a2", w.a2},
         {"a2prime", w.a2prime},
         {"b2", w.b2},
         {"b2prime", w.b2prime},
         {"n", w.n},
         {"k", w.k},
         {"r", w.r},
         {"d", w.d}};
  j["c2"] = w.c2 ? json(*w.c2) : json(nullptr);
  j["M2"] = w.m2 ? subgroup_json(*w.m2) : json(nullptr);
  if (w.xy) {
    j["x"] = digits_json(f, w.xy->first);
    j["y"] = digits_json(f, w.xy->second);
  } else {
    j["x"] = nullptr;
    j["y"] = nullptr;
  }
  return j;
}

std::string fraction(std::uint64_t num, std::uint64_t den) {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

const char* kSs2Note = "SS2 is tested as: H/K cyclic and maximal abelian in N_G(K)/K";

}  // namespace

// ---------------------------------------------------------------------------
// groups and fields

FiniteGroup group_from_json(const json& j, int max_order) {
  if (!j.is_object()) throw PipelineError(kExitPrecondition, "group: expected a JSON object");
  const std::string name = j.value("name", std::string{});
  FiniteGroup g;
  try {
    if (j.contains("table")) {
      g = FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<int>>>(), name);
    } else if (j.contains("cyclic")) {
      const int n = j.at("cyclic").get<int>();
      if (n < 1 || n > max_order) throw groups::OrderBoundError("cyclic group of order " + std::to_string(n));
      g = groups::cyclic_group(n);
      if (!name.empty()) g.set_name(name);
    } else if (j.contains("metacyclic")) {
      const auto& p = j.at("metacyclic");
      const int n = p.at("n").get<int>(), m = p.at("m").get<int>();
      if (n < 1 || m < 1 || static_cast<long long>(n) * m > max_order)
        throw groups::OrderBoundError("metacyclic group of order " + std::to_string(static_cast<long long>(n) * m));
      g = groups::metacyclic_group(n, m, p.at("t").get<int>(), p.at("r").get<int>(), name);
    } else if (j.contains("permutations")) {
      const auto& p = j.at("permutations");
      g = groups::group_from_permutations(p.at("degree").get<int>(),
                                          p.at("generators").get<std::vector<std::vector<int>>>(), name, max_order);
    } else if (j.contains("direct_product")) {
      const auto& parts = j.at("direct_product");
      if (!parts.is_array() || parts.size() < 2) throw PipelineError(kExitPrecondition, "direct_product: need factors");
      g = group_from_json(parts[0], max_order);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        const FiniteGroup h = group_from_json(parts[i], max_order);
        if (static_cast<long long>(g.order()) * h.order() > max_order)
          throw groups::OrderBoundError("direct product exceeds the order bound");
        g = groups::direct_product(g, h);
      }
      if (!name.empty()) g.set_name(name);
    } else {
      throw PipelineError(kExitPrecondition, "group: no table, cyclic, metacyclic, permutations or direct_product");
    }
  } catch (const groups::OrderBoundError& e) {
    throw PipelineError(kExitScope, std::string("group exceeds --max-order ") + std::to_string(max_order) + ": " +
                                        e.what());
  } catch (const groups::GroupError& e) {
    throw PipelineError(kExitPrecondition, std::string("invalid group: ") + e.what());
  } catch (const json::exception& e) {
    throw PipelineError(kExitPrecondition, std::string("malformed group description: ") + e.what());
  }
  if (g.order() > max_order) {
    throw PipelineError(kExitScope, "group order " + std::to_string(g.order()) + " exceeds --max-order " +
                                        std::to_string(max_order));
  }
  if (j.contains("fingerprint") && j.at("fingerprint").get<std::string>() != g.fingerprint())
    throw PipelineError(kExitVerification, "group fingerprint does not match its table");
  return g;
}

FiniteGroup load_group(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) throw PipelineError(kExitPrecondition, "cannot read group file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw PipelineError(kExitPrecondition, path + ": " + e.what());
  }
  return group_from_json(j, max_order);
}

json group_to_json(const FiniteGroup& g) {
  return json{{"name", g.name()}, {"order", g.order()}, {"fingerprint", g.fingerprint()}, {"table", g.table()}};
}

ff::SmallFieldPtr make_base_field(const FieldSpec& spec) {
  try {
    if (!ff::is_prime(spec.q)) throw ff::FieldError("q = " + std::to_string(spec.q) + " is not prime");
    if (spec.m < 1) throw ff::FieldError("m must be positive");
    const auto size = ff::checked_pow(spec.q, spec.m);
    if (size > ff::SmallField::kMaxSize)
      throw PipelineError(kExitScope, "fields larger than 2^16 elements are not supported");
    return ff::make_small_field(ff::make_field(spec.q, spec.m, spec.modulus));
  } catch (const ff::FieldError& e) {
    throw PipelineError(kExitPrecondition, std::string("invalid field: ") + e.what());
  }
}

json field_to_json(const ff::SmallField& f) {
  return json{{"q", f.characteristic()}, {"m", f.degree()}, {"size", f.size()}, {"modulus", f.field()->modulus()}};
}

json element_to_json(const AlgebraElement& a) {
  json coeffs = json::object();
  const auto& f = *a.algebra().field;
  for (int g : a.support()) coeffs[std::to_string(g)] = f.digits(a.coeff(g));
  return json{{"coeffs", std::move(coeffs)}};
}

AlgebraElement element_from_json(const galg::AlgebraPtr& alg, const json& j) {
  AlgebraElement a(alg);
  const auto& f = *alg->field;
  for (const auto& [key, val] : j.at("coeffs").items()) {
    std::size_t used = 0;
    const int g = std::stoi(key, &used);
    if (used != key.size() || g < 0 || g >= alg->dim()) throw PipelineError(kExitPrecondition, "bad element index " + key);
    const auto digits = val.get<std::vector<std::uint32_t>>();
    if (digits.size() != f.degree()) throw PipelineError(kExitPrecondition, "coefficient of wrong length at " + key);
    for (auto d : digits)
      if (d >= f.characteristic()) throw PipelineError(kExitPrecondition, "coefficient digit out of range at " + key);
    a.set(g, f.from_digits(digits));
  }
  return a;
}

FiniteGroup reduce_group(const FiniteGroup& g, std::uint32_t q) {
  if (!groups::is_nilpotent(g)) throw PipelineError(kExitScope, "reduction needs a nilpotent group");
  const auto sylow = groups::sylow_decomposition(g);
  const auto it = sylow.find(static_cast<int>(q));
  const Subgroup gq = it == sylow.end() ? Subgroup::trivial(g) : it->second;
  const auto quo = groups::quotient(g, gq);
  FiniteGroup out = FiniteGroup::from_table(quo.quotient.table(),
                                            (g.name().empty() ? std::string("G") : g.name()) + "/G_" + std::to_string(q));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// decomposition

bool Decomposition::passed() const {
  if (!checks.passed()) return false;
  return std::all_of(components.begin(), components.end(), [](const ComponentResult& c) { return c.checks.passed(); });
}

namespace {

ComponentResult process_component(const galg::AlgebraPtr& alg, const shoda::CentralDecomposition& central,
                                  const shoda::Component& comp, const std::map<int, galg::TraceTable>& traces,
                                  bool construct_sets) {
  ComponentResult r;
  const std::uint32_t m = alg->field->degree();
  r.shape = verify::measure_shape(comp.e);
  r.checks.add("measured shape is a matrix ring over a field", r.shape.exact,
               "D = " + std::to_string(r.shape.D) + ", Z = " + std::to_string(r.shape.Z));
  r.checks.add("matrix size equals [G:H]", r.shape.N == comp.shape.matrix_size,
               std::to_string(r.shape.N) + " vs " + std::to_string(comp.shape.matrix_size));
  r.checks.add("centre degree equals o/[E:H]", static_cast<std::uint64_t>(r.shape.d) == comp.shape.degree_over_F,
               std::to_string(r.shape.d) + " vs " + std::to_string(comp.shape.degree_over_F));
  const std::uint64_t measured_exp = m * static_cast<std::uint64_t>(r.shape.d);
  if (comp.shape.printed_denominator != 1 || comp.shape.printed_numerator != measured_exp) {
    r.notes.push_back("exponent m*o/[E:K] = " + fraction(comp.shape.printed_numerator, comp.shape.printed_denominator) +
                      " differs from the measured exponent " + std::to_string(measured_exp) +
                      "; m*o/[E:H] = " + std::to_string(comp.shape.exponent));
  }
  if (!construct_sets) return r;
  const auto& pair = central.pairs[comp.pair_index];
  try {
    r.set = construct::build_idempotents(alg, pair, comp.cls, traces.at(pair.index()), comp.shape.E);
    r.checks.add("constructed e_C matches", r.set->e_C == comp.e);
    r.checks.append(verify::check_idempotent_set(comp.e, r.set->idempotents, r.shape), "idempotents: ");
    r.units = construct::matrix_units(*r.set);
    r.checks.append(verify::check_matrix_units(comp.e, r.units->units, r.units->size()), "matrix units: ");
    r.checks.append(verify::check_corner_rings(r.set->idempotents, r.shape), "corner rings: ");
  } catch (const construct::ConstructionError& e) {
    r.checks.add("construction", false, e.what());
  }
  return r;
}

json component_json(const Decomposition& dec, std::size_t i, bool with_units) {
  const auto& comp = dec.central.components[i];
  const auto& res = dec.components[i];
  const auto& pair = dec.central.pairs[comp.pair_index];
  const auto& f = *dec.alg->field;
  json j;
  j["index"] = i;
  j["pair"] = {{"H", subgroup_json(pair.H)},
               {"K", subgroup_json(pair.K)},
               {"generator", pair.generator},
               {"index", pair.index()},
               {"pair_number", comp.pair_index}};
  j["class"] = {{"modulus", comp.cls.modulus}, {"exponents", comp.cls.exponents}};
  json aliases = json::array();
  for (const auto& [p, c] : comp.aliases) aliases.push_back({p, c});
  j["aliases"] = std::move(aliases);
  j["e_C"] = element_to_json(comp.e);
  j["predicted"] = {{"matrix_size", comp.shape.matrix_size},
                    {"o", comp.shape.o},
                    {"E", subgroup_json(comp.shape.E)},
                    {"index_E_H", comp.shape.index_E_H},
                    {"index_E_K", comp.shape.index_E_K},
                    {"degree_over_F", comp.shape.degree_over_F},
                    {"exponent", comp.shape.exponent},
                    {"exponent_E_K", fraction(comp.shape.printed_numerator, comp.shape.printed_denominator)}};
  j["measured"] = {{"D", res.shape.D},
                   {"Z", res.shape.Z},
                   {"matrix_size", res.shape.N},
                   {"degree_over_F", res.shape.d},
                   {"exponent", f.degree() * static_cast<std::uint32_t>(res.shape.d)}};
  if (res.set) {
    json c;
    c["case"] = construct::to_string(res.set->witness.tag);
    c["witness"] = witness_json(res.set->witness, f);
    c["beta"] = element_to_json(res.set->beta);
    c["transversal"] = res.set->transversal;
    json ids = json::array();
    for (const auto& b : res.set->idempotents) ids.push_back(element_to_json(b));
    c["idempotents"] = std::move(ids);
    if (with_units && res.units) {
      json rows = json::array();
      for (std::size_t a = 0; a < res.units->size(); ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < res.units->size(); ++b) row.push_back(element_to_json(res.units->at(a, b)));
        rows.push_back(std::move(row));
      }
      c["matrix_units"] = std::move(rows);
    }
    j["construction"] = std::move(c);
  } else {
    j["construction"] = nullptr;
  }
  j["verification"] = {{"passed", res.checks.passed()}, {"checks", check_json(res.checks)}};
  j["notes"] = res.notes;
  return j;
}

}  // namespace

Decomposition decompose(FiniteGroup g, const FieldSpec& field, const Options& opt) {
  if (g.order() > opt.max_order) {
    throw PipelineError(kExitScope, "group order " + std::to_string(g.order()) + " exceeds --max-order " +
                                        std::to_string(opt.max_order));
  }
  const auto f = make_base_field(field);
  json reduction = nullptr;
  if (opt.reduce) {
    const FiniteGroup original = g;
    g = reduce_group(g, field.q);
    reduction = {{"original", group_to_json(original)}, {"q", field.q}, {"kernel_order", original.order() / g.order()}};
  }
  if (g.order() % static_cast<int>(field.q) == 0) {
    throw PipelineError(kExitPrecondition, "group order not invertible in the field: " + std::to_string(field.q) +
                                               " divides " + std::to_string(g.order()) + " (use --reduce)");
  }
  const bool nilpotent = groups::is_nilpotent(g);
  if (opt.require_nilpotent && !nilpotent) throw PipelineError(kExitScope, "group is not nilpotent");

  Decomposition dec;
  dec.alg = galg::make_algebra(g, f);
  dec.central = shoda::central_decomposition(dec.alg, opt.jobs);
  const auto traces = shoda::trace_tables(*f, dec.central.pairs);

  const int n_comp = static_cast<int>(dec.central.components.size());
  const int n_pairs = static_cast<int>(dec.central.pairs.size());
  dec.components.resize(n_comp);
  std::vector<verify::Report> projection(n_pairs);
#pragma omp parallel num_threads(thread_count(opt.jobs))
  {
#pragma omp for schedule(dynamic) nowait
    for (int i = 0; i < n_comp; ++i) {
      dec.components[i] = process_component(dec.alg, dec.central, dec.central.components[i], traces, nilpotent);
    }
#pragma omp for schedule(dynamic)
    for (int i = 0; i < n_pairs; ++i) {
      const auto& p = dec.central.pairs[i];
      projection[i] = verify::check_epsilon_projection(dec.alg, p, dec.central.classes[i], traces.at(p.index()));
    }
  }

  std::vector<AlgebraElement> es;
  for (const auto& c : dec.central.components) es.push_back(c.e);
  const verify::Report completeness = verify::check_central_decomposition(dec.alg, es);
  (nilpotent ? dec.checks : dec.informative).append(completeness, "central decomposition: ");
  json pairs = json::array();
  for (int i = 0; i < n_pairs; ++i) {
    const auto& p = dec.central.pairs[i];
    dec.checks.append(projection[i], "pair " + std::to_string(i) + ": ");
    json classes = json::array();
    for (const auto& c : dec.central.classes[i]) classes.push_back(c.exponents);
    pairs.push_back({{"H", subgroup_json(p.H)},
                     {"K", subgroup_json(p.K)},
                     {"generator", p.generator},
                     {"classes", std::move(classes)},
                     {"projection_identities", projection[i].passed()}});
  }

  json report;
  report["schema"] = "fga.decomposition/1";
  report["field"] = field_to_json(*f);
  report["group"] = group_to_json(g);
  report["reduction"] = std::move(reduction);
  report["nilpotent"] = nilpotent;
  report["strong_shoda_pairs"] = std::move(pairs);
  json comps = json::array();
  for (int i = 0; i < n_comp; ++i) comps.push_back(component_json(dec, static_cast<std::size_t>(i), opt.matrix_units));
  report["components"] = std::move(comps);
  std::vector<std::string> notes{kSs2Note};
  if (!nilpotent) {
    notes.push_back("group is not nilpotent: primitive idempotents are not constructed and completeness is informative");
  }
  report["notes"] = notes;
  report["verification"] = {{"passed", dec.passed()},
                            {"checks", check_json(dec.checks)},
                            {"informative", check_json(dec.informative)}};
  dec.report = std::move(report);
  return dec;
}

// ---------------------------------------------------------------------------
// re-verification

Verdict verify_report(const json& report, int jobs) {
  Verdict v;
  auto& r = v.checks;
  if (!report.is_object() || report.value("schema", std::string{}) != "fga.decomposition/1")
    throw PipelineError(kExitPrecondition, "not a decomposition report");
  FiniteGroup g;
  ff::SmallFieldPtr f;
  try {
    g = group_from_json(report.at("group"), std::max(groups::kDefaultMaxOrder, report.at("group").at("order").get<int>()));
    const auto& fj = report.at("field");
    FieldSpec spec{fj.at("q").get<std::uint32_t>(), fj.at("m").get<std::uint32_t>(),
                   fj.at("modulus").get<ff::Poly>()};
    f = make_base_field(spec);
  } catch (const PipelineError& e) {
    if (e.exit_code() == kExitVerification) {
      r.add("group fingerprint", false, e.what());
      return v;
    }
    if (e.exit_code() == kExitPrecondition && report.at("group").contains("table")) {
      r.add("group table", false, e.what());
      return v;
    }
    throw;
  } catch (const json::exception& e) {
    throw PipelineError(kExitPrecondition, std::string("malformed report: ") + e.what());
  }
  r.add("group fingerprint", true);
  const auto alg = galg::make_algebra(g, f);
  const bool nilpotent = groups::is_nilpotent(g);
  r.add("nilpotency flag", report.value("nilpotent", !nilpotent) == nilpotent);

  try {
    const auto& comps = report.at("components");
    std::vector<AlgebraElement> es;
    for (const auto& c : comps) es.push_back(element_from_json(alg, c.at("e_C")));
    const auto completeness = verify::check_central_decomposition(alg, es);
    if (nilpotent) r.append(completeness, "central decomposition: ");

    std::vector<verify::Report> per(comps.size());
    std::vector<std::string> errors(comps.size());
    const int n = static_cast<int>(comps.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(jobs))
    for (int i = 0; i < n; ++i) {
      try {
        const auto& c = comps[i];
        auto& pr = per[i];
        const auto& e = es[i];
        const auto shape = verify::measure_shape(e);
        const auto& meas = c.at("measured");
        pr.add("measured shape", shape.exact && meas.at("matrix_size").get<int>() == shape.N &&
                                     meas.at("degree_over_F").get<int>() == shape.d && meas.at("D").get<int>() == shape.D,
               "recomputed N = " + std::to_string(shape.N) + ", d = " + std::to_string(shape.d));
        const auto& con = c.at("construction");
        if (con.is_null()) continue;
        const AlgebraElement beta = element_from_json(alg, con.at("beta"));
        const auto t = con.at("transversal").get<std::vector<int>>();
        std::vector<AlgebraElement> ids;
        for (const auto& x : con.at("idempotents")) ids.push_back(element_from_json(alg, x));
        bool conj_ok = ids.size() == t.size();
        for (std::size_t k = 0; conj_ok && k < t.size(); ++k) {
          conj_ok = t[k] >= 0 && t[k] < g.order() && beta.conjugate(t[k]) == ids[k];
        }
        pr.add("idempotents are the T-conjugates of beta", conj_ok);
        pr.append(verify::check_idempotent_set(e, ids, shape), "idempotents: ");
        std::vector<AlgebraElement> units;
        if (con.contains("matrix_units")) {
          for (const auto& row : con.at("matrix_units"))
            for (const auto& x : row) units.push_back(element_from_json(alg, x));
        } else if (conj_ok) {
          for (int a : t)
            for (int b : t) units.push_back(beta.left_mul(g.inv(a)).right_mul(b));
        }
        pr.append(verify::check_matrix_units(e, units, t.size()), "matrix units: ");
        pr.append(verify::check_corner_rings(ids, shape), "corner rings: ");
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!errors[i].empty()) throw PipelineError(kExitPrecondition, "component " + std::to_string(i) + ": " + errors[i]);
      r.append(per[i], "component " + std::to_string(i) + ": ");
    }

    // recomputation drift
    const auto fresh = shoda::central_decomposition(alg, jobs);
    bool same = fresh.components.size() == es.size();
    for (std::size_t i = 0; same && i < es.size(); ++i) same = fresh.components[i].e == es[i];
    r.add("central idempotents match a fresh computation", same);
  } catch (const json::exception& e) {
    throw PipelineError(kExitPrecondition, std::string("malformed report: ") + e.what());
  }
  return v;
}

// ---------------------------------------------------------------------------
// codes

namespace {

struct Selection {
  std::string label;
  AlgebraElement element;
};

AlgebraElement select_term(const Decomposition& dec, const std::string& term) {
  static const std::regex e0("e0"), big_c("C([0-9]+)"), small_c("c([0-9]+)"), prim("p([0-9]+)\\.([0-9]+)");
  std::smatch m;
  const auto& comps = dec.central.components;
  if (std::regex_match(term, m, e0)) return galg::averaging_idempotent(dec.alg, Subgroup::whole(dec.alg->group));
  if (std::regex_match(term, m, big_c)) {
    const int j = std::stoi(m[1]);
    for (const auto& c : comps)
      if (dec.central.pairs[c.pair_index].K.order() == 1 && c.cls.contains(j)) return c.e;
    throw PipelineError(kExitPrecondition, "selector " + term + ": no component with K = 1 and " +
                                               std::to_string(j) + " in its class");
  }
  if (std::regex_match(term, m, small_c)) {
    const auto i = std::stoul(m[1]);
    if (i >= comps.size()) throw PipelineError(kExitPrecondition, "selector " + term + ": no such component");
    return comps[i].e;
  }
  if (std::regex_match(term, m, prim)) {
    const auto i = std::stoul(m[1]), t = std::stoul(m[2]);
    if (i >= comps.size() || !dec.components[i].set || t >= dec.components[i].set->idempotents.size())
      throw PipelineError(kExitPrecondition, "selector " + term + ": no such primitive idempotent");
    return dec.components[i].set->idempotents[t];
  }
  throw PipelineError(kExitPrecondition, "malformed selector term '" + term + "'");
}

std::vector<Selection> parse_selector(const Decomposition& dec, const std::string& selector) {
  std::vector<Selection> out;
  if (selector == "all-central") {
    for (std::size_t i = 0; i < dec.central.components.size(); ++i)
      out.push_back({"c" + std::to_string(i), dec.central.components[i].e});
    return out;
  }
  if (selector == "all-primitive") {
    for (std::size_t i = 0; i < dec.components.size(); ++i) {
      if (!dec.components[i].set) throw PipelineError(kExitScope, "all-primitive needs a nilpotent group");
      const auto& ids = dec.components[i].set->idempotents;
      for (std::size_t t = 0; t < ids.size(); ++t) out.push_back({"p" + std::to_string(i) + "." + std::to_string(t), ids[t]});
    }
    return out;
  }
  if (selector.empty()) throw PipelineError(kExitPrecondition, "empty selector");
  AlgebraElement sum(dec.alg);
  std::stringstream ss(selector);
  std::string term;
  while (std::getline(ss, term, '+')) sum += select_term(dec, term);
  out.push_back({selector, sum});
  return out;
}

}  // namespace

json codes_report(const Decomposition& dec, const std::string& selector, std::uint64_t bound) {
  json out;
  out["schema"] = "fga.codes/1";
  out["field"] = field_to_json(*dec.alg->field);
  out["group"] = {{"name", dec.alg->group.name()}, {"order", dec.alg->group.order()},
                  {"fingerprint", dec.alg->group.fingerprint()}};
  out["selector"] = selector;
  json list = json::array();
  for (const auto& s : parse_selector(dec, selector)) {
    auto code = codes::left_ideal_code(s.element, s.label);
    json c{{"label", code.label},
           {"length", code.length},
           {"dimension", code.dimension()},
           {"generator", element_to_json(s.element)},
           {"left_ideal", codes::is_left_ideal(code, dec.alg->group)}};
    if (code.dimension() == 0) {
      c["min_distance"] = nullptr;
      c["min_distance_note"] = "zero code";
    } else {
      try {
        c["min_distance"] = codes::min_distance(code, bound);
      } catch (const codes::CodeError& e) {
        c["min_distance"] = nullptr;
        c["min_distance_note"] = e.what();
      }
    }
    std::vector<std::string> rows;
    std::stringstream text(codes::generator_matrix_text(code));
    for (std::string line; std::getline(text, line);) rows.push_back(line);
    c["generator_matrix"] = rows;
    list.push_back(std::move(c));
  }
  out["codes"] = std::move(list);
  return out;
}

}  // namespace fga::pipeline
