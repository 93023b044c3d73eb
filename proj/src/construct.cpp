#include "fga/construct.hpp"

#include <algorithm>

namespace fga::construct {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::cyclic_G_equals_H:
      return "cyclic-G-equals-H";
    case CaseTag::case1i:
      return "case1i";
    case CaseTag::case1ii:
      return "case1ii";
    case CaseTag::case2:
      return "case2";
  }
  return "unknown";
}

namespace {

int log2_exact(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  if ((1 << k) != n) throw ConstructionError("expected a power of two, got " + std::to_string(n));
  return k;
}

// A subgroup S of Q viewed as a group in its own right.
groups::QuotientGroup as_group(const FiniteGroup& q, const Subgroup& s) {
  return groups::section_quotient(q, s, Subgroup::trivial(q));
}

Subgroup image_in(const groups::QuotientGroup& sec, const Subgroup& s) {
  std::vector<int> el;
  for (int x : s.elements()) el.push_back(sec.projection[x]);
  std::sort(el.begin(), el.end());
  return Subgroup(sec.quotient, std::move(el));
}

int lift_to_G(const FiniteGroup& g, const groups::QuotientGroup& ek, int x, LiftChoice choice) {
  const int least = ek.lift[x];
  if (choice == LiftChoice::least) return least;
  int best = least;
  for (int k : ek.kernel.elements()) best = std::max(best, g.mul(least, k));
  return best;
}

// r with x^{-1} a x = a^r inside <a>, or -1.
int action_exponent(const FiniteGroup& p, int a, int x) {
  const int target = p.conj(a, x);
  int y = 0;
  for (int i = 0; i < p.element_order(a); ++i) {
    if (y == target) return i;
    y = p.mul(y, a);
  }
  return -1;
}

bool is_central_in(const FiniteGroup& p, int z) {
  for (int y = 0; y < p.order(); ++y)
    if (p.mul(z, y) != p.mul(y, z)) return false;
  return true;
}

bool r_is_one_mod_4(int r, int n) { return (r - 1) % std::min(4, 1 << n) == 0; }

struct BC {
  int b;
  int c;
  int r;
};

// b of order 2^k with a^b = a^r, r = 1 mod 4; c with a^c = a^{-1},
// c^2 = c_square and [b, c] = 1; <a, b, c> = `whole`.
std::optional<BC> search_bc(const FiniteGroup& p, const Subgroup& whole, int a, int n, int k, int c_square) {
  const int a_inv = p.inv(a);
  for (int b : whole.elements()) {
    if (p.element_order(b) != (1 << k)) continue;
    const int r = action_exponent(p, a, b);
    if (r < 0 || !r_is_one_mod_4(r, n)) continue;
    for (int c : whole.elements()) {
      if (p.mul(c, c) != c_square || p.conj(a, c) != a_inv) continue;
      if (p.mul(b, c) != p.mul(c, b)) continue;
      const std::vector<int> gens{a, b, c};
      if (groups::generated_subgroup(p, gens).order() == whole.order()) return BC{b, c, r};
    }
  }
  return std::nullopt;
}

}  // namespace

SplitEK split_EK(const FiniteGroup& g, const shoda::StrongShodaPair& pair, const Subgroup& e) {
  SplitEK s;
  s.ek = groups::section_quotient(g, e, pair.K);
  const FiniteGroup& q = s.ek.quotient;
  std::tie(s.e2, s.e2prime) = groups::two_part_split(q);
  const int abar = s.ek.projection[pair.generator];
  std::tie(s.a2, s.a2prime) = groups::element_two_split(q, abar);
  s.h2 = groups::cyclic_subgroup(q, s.a2);
  s.h2prime = groups::cyclic_subgroup(q, s.a2prime);
  const auto odd = as_group(q, s.e2prime);
  const auto comp = groups::find_cyclic_complement(odd.quotient, image_in(odd, s.h2prime));
  if (!comp) throw ConstructionError("no cyclic complement of the 2'-part of H/K in E/K");
  s.b2prime = odd.lift[comp->second];
  return s;
}

CaseWitness classify_case(const FiniteGroup& g, const SplitEK& split, const ff::SmallField& f, LiftChoice lift) {
  const FiniteGroup& q = split.ek.quotient;
  auto up = [&](int x) { return lift_to_G(g, split.ek, x, lift); };
  CaseWitness w;
  w.a2 = up(split.a2);
  w.a2prime = up(split.a2prime);
  w.b2prime = up(split.b2prime);

  const auto two = as_group(q, split.e2);
  const FiniteGroup& p = two.quotient;
  const Subgroup a_sub = image_in(two, split.h2);
  const int a = two.projection[split.a2];
  w.n = log2_exact(a_sub.order());
  w.d = p.order() / a_sub.order();

  if (const auto m = groups::find_complement(p, a_sub)) {
    std::vector<int> in_q;
    for (int x : m->elements()) in_q.push_back(two.lift[x]);
    std::sort(in_q.begin(), in_q.end());
    w.m2 = split.ek.preimage(g, Subgroup(q, std::move(in_q)));
    if (const auto gen = groups::is_cyclic(p, *m)) {
      w.b2 = up(two.lift[*gen]);
      w.k = log2_exact(m->order());
      w.r = action_exponent(p, a, *gen);
      const bool central = w.n <= 1 || is_central_in(p, p.pow(a, 1LL << (w.n - 2)));
      w.tag = central ? CaseTag::case1i : CaseTag::case1ii;
    } else {
      w.k = log2_exact(m->order() / 2);
      const auto bc = search_bc(p, *m, a, w.n, w.k, 0);
      if (!bc) throw ConstructionError("non-cyclic complement does not fit <a, b, c | a^c = a^-1, c^2 = 1>");
      w.b2 = up(two.lift[bc->b]);
      w.c2 = up(two.lift[bc->c]);
      w.r = bc->r;
      w.tag = CaseTag::case1ii;
    }
    return w;
  }

  if (w.n < 2) throw ConstructionError("no complement although H_2/K has order at most 2");
  w.k = log2_exact(w.d / 2);
  const auto bc = search_bc(p, Subgroup::whole(p), a, w.n, w.k, p.pow(a, 1LL << (w.n - 1)));
  if (!bc) throw ConstructionError("2-part of E/K does not fit <a, b, c | c^2 = a^(2^(n-1)), a^c = a^-1>");
  w.b2 = up(two.lift[bc->b]);
  w.c2 = up(two.lift[bc->c]);
  w.r = bc->r;
  w.tag = CaseTag::case2;
  const auto [x, y] = ff::sum_of_two_squares_minus_one(f.field());
  w.xy = std::make_pair(f.from_element(x), f.from_element(y));
  return w;
}

IdempotentSet build_idempotents(const galg::AlgebraPtr& alg, const shoda::StrongShodaPair& pair,
                                const shoda::CyclotomicClass& cls, const galg::TraceTable& traces,
                                const Subgroup& e, LiftChoice lift) {
  const FiniteGroup& g = alg->group;
  const ff::SmallField& f = *alg->field;
  IdempotentSet out;
  out.epsilon_C = shoda::epsilon_C(alg, pair, cls, traces);
  out.e_C = galg::sum_of_conjugates(out.epsilon_C);

  if (pair.H.order() == g.order()) {
    out.witness.tag = CaseTag::cyclic_G_equals_H;
    out.witness.a2 = out.witness.a2prime = pair.generator;
    out.beta = out.epsilon_C;
    out.transversal = {0};
    out.idempotents = {out.beta};
    return out;
  }

  const SplitEK split = split_EK(g, pair, e);
  CaseWitness w = classify_case(g, split, f, lift);

  AlgebraElement beta2;
  std::vector<int> t2;
  switch (w.tag) {
    case CaseTag::case1i:
      beta2 = galg::averaging_idempotent(alg, *w.m2);
      for (int i = 0; i < (1 << w.k); ++i) t2.push_back(g.pow(w.a2, i));
      break;
    case CaseTag::case1ii: {
      if (w.n < 2) throw ConstructionError("case 1(ii) needs |a_2 K| >= 4");
      beta2 = galg::averaging_idempotent(alg, *w.m2);
      const long long shift = 1LL << (w.n - 2);
      for (int i = 0; i < w.d / 2; ++i) t2.push_back(g.pow(w.a2, i));
      for (int i = 0; i < w.d / 2; ++i) t2.push_back(g.pow(w.a2, shift + i));
      break;
    }
    case CaseTag::case2: {
      const galg::Code half = f.inv(f.from_int(2));
      const int u = g.pow(w.a2, 1LL << (w.n - 2));
      AlgebraElement fpart = AlgebraElement::basis(alg, 0, half);
      fpart += AlgebraElement::basis(alg, u, f.mul(w.xy->first, half));
      fpart += AlgebraElement::basis(alg, g.mul(u, *w.c2), f.mul(w.xy->second, half));
      beta2 = galg::averaging_idempotent(alg, groups::cyclic_subgroup(g, w.b2)) * fpart;
      for (int i = 0; i < (1 << w.k); ++i) t2.push_back(g.pow(w.a2, i));
      for (int i = 0; i < (1 << w.k); ++i) t2.push_back(g.mul(*w.c2, g.pow(w.a2, i)));
      break;
    }
    case CaseTag::cyclic_G_equals_H:
      break;
  }

  const AlgebraElement b2p = galg::averaging_idempotent(alg, groups::cyclic_subgroup(g, w.b2prime));
  out.beta = b2p * beta2 * out.epsilon_C;

  std::vector<int> t2p;
  const int odd_index = split.e2prime.order() / split.h2prime.order();
  for (int i = 0; i < odd_index; ++i) t2p.push_back(g.pow(w.a2prime, i));
  const std::vector<int> te = groups::right_transversal(g, e);
  for (int x : t2p)
    for (int y : t2)
      for (int z : te) out.transversal.push_back(g.mul(g.mul(x, y), z));

  if (static_cast<int>(out.transversal.size()) != g.order() / pair.H.order()) {
    throw ConstructionError("|T| = " + std::to_string(out.transversal.size()) + " differs from [G:H] = " +
                            std::to_string(g.order() / pair.H.order()));
  }
  for (std::size_t i = 0; i < out.transversal.size(); ++i) {
    out.idempotents.push_back(out.beta.conjugate(out.transversal[i]));
    if (out.idempotents.back().is_zero())
      throw ConstructionError("conjugate of beta by T[" + std::to_string(i) + "] vanishes");
  }
  out.witness = std::move(w);
  return out;
}

MatrixUnits matrix_units(const IdempotentSet& set) {
  MatrixUnits mu;
  mu.transversal = set.transversal;
  const FiniteGroup& g = set.beta.algebra().group;
  for (int t : set.transversal) {
    const AlgebraElement left = set.beta.left_mul(g.inv(t));
    for (int u : set.transversal) mu.units.push_back(left.right_mul(u));
  }
  return mu;
}

}  // namespace fga::construct
