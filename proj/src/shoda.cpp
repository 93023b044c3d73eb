#include "fga/shoda.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include <omp.h>

namespace fga::shoda {

namespace {

std::vector<int> discrete_logs(const groups::QuotientGroup& quo, int abar) {
  const int k = quo.quotient.order();
  std::vector<int> dlog(k, -1);
  int x = 0;
  for (int i = 0; i < k; ++i) {
    dlog[x] = i;
    x = quo.quotient.mul(x, abar);
  }
  return dlog;
}

}  // namespace

bool satisfies_ss1(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (!k.is_subset_of(h)) return false;
  const Subgroup n = groups::normalizer(g, k);
  return h.is_subset_of(n) && groups::is_normal_in(g, h, n);
}

bool satisfies_ss2(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  const auto quo = groups::section_quotient(g, h, k);
  if (!groups::is_cyclic(quo.quotient, Subgroup::whole(quo.quotient))) return false;
  return groups::centralizer_mod(g, groups::normalizer(g, k), h, k) == h;
}

bool satisfies_ss3(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  const Subgroup n = groups::normalizer(g, k);
  if (n.order() == g.order()) return true;
  const galg::IntVector eps = galg::scaled_rational_epsilon(g, h, k);
  for (int x : groups::right_transversal(g, n)) {
    if (n.contains(x)) continue;
    const auto prod = galg::int_convolve(g, eps, galg::int_conjugate(g, eps, x));
    if (std::any_of(prod.begin(), prod.end(), [](std::int64_t v) { return v != 0; })) return false;
  }
  return true;
}

StrongShodaPair make_pair(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  StrongShodaPair p;
  p.H = h;
  p.K = k;
  p.quotient = groups::section_quotient(g, h, k);
  p.normalizer_of_K = groups::normalizer(g, k);
  const int idx = p.index();
  bool found = false;
  for (int x : h.elements()) {
    if (p.quotient.quotient.element_order(p.quotient.projection[x]) == idx) {
      p.generator = x;
      found = true;
      break;
    }
  }
  if (!found) throw groups::GroupError("make_pair: H/K is not cyclic");
  return p;
}

std::vector<StrongShodaPair> strong_shoda_pairs(const FiniteGroup& g) {
  const auto subs = groups::all_subgroups(g);
  std::vector<std::pair<const Subgroup*, const Subgroup*>> found;
  for (const auto& k : subs) {
    const Subgroup n = groups::normalizer(g, k);
    for (const auto& h : subs) {
      if (h.order() % k.order() != 0 || n.order() % h.order() != 0) continue;
      if (!k.is_subset_of(h) || !h.is_subset_of(n)) continue;
      if (!groups::is_normal_in(g, h, n)) continue;
      if (!satisfies_ss2(g, h, k)) continue;
      if (!satisfies_ss3(g, h, k)) continue;
      found.emplace_back(&h, &k);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::forward_as_tuple(a.first->order(), a.second->order(), a.first->elements(), a.second->elements()) <
           std::forward_as_tuple(b.first->order(), b.second->order(), b.first->elements(), b.second->elements());
  });
  std::vector<StrongShodaPair> out;
  out.reserve(found.size());
  for (const auto& [h, k] : found) out.push_back(make_pair(g, *h, *k));
  return out;
}

bool CyclotomicClass::contains(int j) const { return std::binary_search(exponents.begin(), exponents.end(), j); }

std::vector<CyclotomicClass> cyclotomic_classes(int k, std::uint64_t qm) {
  if (k < 1) throw std::invalid_argument("cyclotomic_classes: k must be positive");
  if (k == 1) return {CyclotomicClass{1, {0}}};
  const auto mult = static_cast<int>(qm % static_cast<std::uint64_t>(k));
  if (std::gcd(mult, k) != 1) throw std::invalid_argument("cyclotomic_classes: q^m is not a unit modulo k");
  std::vector<char> seen(k, 0);
  std::vector<CyclotomicClass> out;
  for (int j = 1; j < k; ++j) {
    if (seen[j] || std::gcd(j, k) != 1) continue;
    CyclotomicClass c{k, {}};
    int x = j;
    while (!seen[x]) {
      seen[x] = 1;
      c.exponents.push_back(x);
      x = static_cast<int>(static_cast<long long>(x) * mult % k);
    }
    std::sort(c.exponents.begin(), c.exponents.end());
    out.push_back(std::move(c));
  }
  return out;
}

int conjugation_exponent(const FiniteGroup& g, const StrongShodaPair& pair, int x) {
  const auto& quo = pair.quotient;
  const int abar = quo.projection[pair.generator];
  const int image = quo.projection[g.conj(pair.generator, x)];
  if (image < 0) throw groups::GroupError("conjugation_exponent: element does not normalize H");
  const auto dlog = discrete_logs(quo, abar);
  return dlog[image];
}

Subgroup stabilizer_of_class(const FiniteGroup& g, const StrongShodaPair& pair, const CyclotomicClass& c) {
  const Subgroup n = groups::intersection(groups::normalizer(g, pair.H), pair.normalizer_of_K);
  const int k = pair.index();
  if (c.modulus != k) throw std::invalid_argument("stabilizer_of_class: class modulus differs from [H:K]");
  if (k == 1) return n;
  const auto& quo = pair.quotient;
  const auto dlog = discrete_logs(quo, quo.projection[pair.generator]);
  std::vector<int> out;
  for (int x : n.elements()) {
    const int s = dlog[quo.projection[g.conj(pair.generator, x)]];
    std::vector<int> image;
    image.reserve(c.exponents.size());
    for (int j : c.exponents) image.push_back(static_cast<int>(static_cast<long long>(j) * s % k));
    std::sort(image.begin(), image.end());
    if (image == c.exponents) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

Subgroup stabilizer_E(const FiniteGroup& g, const StrongShodaPair& pair, std::uint64_t qm) {
  const auto classes = cyclotomic_classes(pair.index(), qm);
  return stabilizer_of_class(g, pair, classes.front());
}

ComponentShape component_shape(const FiniteGroup& g, const StrongShodaPair& pair, const Subgroup& e,
                               std::uint64_t qm, std::uint32_t m) {
  ComponentShape s;
  const auto k = static_cast<std::uint64_t>(pair.index());
  s.matrix_size = g.order() / pair.H.order();
  s.o = ff::multiplicative_order(qm % k, k);
  s.index_E_H = e.order() / pair.H.order();
  s.index_E_K = e.order() / pair.K.order();
  if (s.o % static_cast<std::uint64_t>(s.index_E_H) != 0)
    throw groups::GroupError("component_shape: [E:H] does not divide the order of q^m");
  s.degree_over_F = s.o / static_cast<std::uint64_t>(s.index_E_H);
  s.exponent = m * s.degree_over_F;
  const std::uint64_t num = m * s.o;
  const auto den = static_cast<std::uint64_t>(s.index_E_K);
  const std::uint64_t gcd = std::gcd(num, den);
  s.printed_numerator = num / gcd;
  s.printed_denominator = den / gcd;
  s.E = e;
  return s;
}

std::map<int, galg::TraceTable> trace_tables(const ff::SmallField& f, const std::vector<StrongShodaPair>& pairs) {
  std::set<int> ks;
  for (const auto& p : pairs) ks.insert(p.index());
  std::map<int, galg::TraceTable> out;
  for (int k : ks) out.emplace(k, galg::make_trace_table(f, k));
  return out;
}

galg::AlgebraElement epsilon_C(const galg::AlgebraPtr& alg, const StrongShodaPair& pair, const CyclotomicClass& c,
                               const galg::TraceTable& traces) {
  return galg::epsilon_C(alg, pair.H, pair.K, pair.generator, c.representative(), traces);
}

CentralDecomposition central_decomposition(const galg::AlgebraPtr& alg, int jobs) {
  const FiniteGroup& g = alg->group;
  if (!alg->semisimple()) throw galg::AlgebraError("group order not invertible in the field");
  const std::uint64_t qm = alg->field->size();
  const std::uint32_t m = alg->field->degree();

  CentralDecomposition out;
  out.nilpotent = groups::is_nilpotent(g);
  out.pairs = strong_shoda_pairs(g);
  const auto traces = trace_tables(*alg->field, out.pairs);

  std::vector<std::pair<int, int>> tasks;
  for (std::size_t i = 0; i < out.pairs.size(); ++i) {
    out.classes.push_back(cyclotomic_classes(out.pairs[i].index(), qm));
    for (std::size_t c = 0; c < out.classes.back().size(); ++c)
      tasks.emplace_back(static_cast<int>(i), static_cast<int>(c));
  }
  std::vector<ComponentShape> shapes(out.pairs.size());
  std::vector<galg::AlgebraElement> values(tasks.size());
  const int n_pairs = static_cast<int>(out.pairs.size());
  const int n_tasks = static_cast<int>(tasks.size());
  const int threads = jobs > 0 ? jobs : 0;

#pragma omp parallel num_threads(threads > 0 ? threads : omp_get_max_threads())
  {
#pragma omp for schedule(dynamic)
    for (int i = 0; i < n_pairs; ++i) {
      const auto& p = out.pairs[i];
      shapes[i] = component_shape(g, p, stabilizer_E(g, p, qm), qm, m);
    }
#pragma omp for schedule(dynamic)
    for (int t = 0; t < n_tasks; ++t) {
      const auto [pi, ci] = tasks[t];
      const auto& p = out.pairs[pi];
      values[t] = galg::sum_of_conjugates(epsilon_C(alg, p, out.classes[pi][ci], traces.at(p.index())));
    }
  }

  std::map<std::vector<galg::Code>, std::size_t> seen;
  for (int t = 0; t < n_tasks; ++t) {
    const auto [pi, ci] = tasks[t];
    std::vector<galg::Code> key(values[t].coeffs().begin(), values[t].coeffs().end());
    auto [it, fresh] = seen.emplace(std::move(key), out.components.size());
    if (!fresh) {
      out.components[it->second].aliases.emplace_back(pi, ci);
      continue;
    }
    Component c;
    c.pair_index = pi;
    c.class_index = ci;
    c.cls = out.classes[pi][ci];
    c.e = std::move(values[t]);
    c.shape = shapes[pi];
    out.components.push_back(std::move(c));
  }
  return out;
}

}  // namespace fga::shoda
