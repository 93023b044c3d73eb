#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "fga/shoda.hpp"
#include "fga/verify.hpp"

using namespace fga;
using groups::Subgroup;

namespace {

galg::AlgebraPtr algebra(groups::FiniteGroup g, std::uint32_t q, std::uint32_t m = 1) {
  return galg::make_algebra(std::move(g), ff::make_small_field(ff::make_field(q, m)));
}

groups::FiniteGroup q8() { return groups::metacyclic_group(4, 2, 2, 3, "Q8"); }
groups::FiniteGroup m16() { return groups::metacyclic_group(8, 2, 0, 5, "M16"); }

const shoda::StrongShodaPair* find_pair(const std::vector<shoda::StrongShodaPair>& ps, const Subgroup& h,
                                        const Subgroup& k) {
  for (const auto& p : ps)
    if (p.H == h && p.K == k) return &p;
  return nullptr;
}

}  // namespace

TEST_CASE("cyclotomic classes") {
  auto exps = [](int k, std::uint64_t qm) {
    std::vector<std::vector<int>> out;
    for (const auto& c : shoda::cyclotomic_classes(k, qm)) out.push_back(c.exponents);
    return out;
  };
  CHECK(exps(3, 2) == std::vector<std::vector<int>>{{1, 2}});
  CHECK(exps(8, 3) == std::vector<std::vector<int>>{{1, 3}, {5, 7}});
  CHECK(exps(7, 2) == std::vector<std::vector<int>>{{1, 2, 4}, {3, 5, 6}});
  CHECK(exps(1, 5) == std::vector<std::vector<int>>{{0}});
  // sizes divide o_k and the classes partition the units
  for (int k = 2; k <= 30; ++k) {
    for (std::uint64_t qm : {2u, 3u, 4u, 5u, 7u, 9u, 25u}) {
      if (std::gcd<std::uint64_t>(qm, k) != 1) continue;
      const auto o = ff::multiplicative_order(qm % k, k);
      std::set<int> seen;
      for (const auto& c : shoda::cyclotomic_classes(k, qm)) {
        CHECK(o % c.exponents.size() == 0);
        for (int j : c.exponents) CHECK(seen.insert(j).second);
      }
      int units = 0;
      for (int j = 1; j < k; ++j) units += std::gcd(j, k) == 1;
      CHECK(static_cast<int>(seen.size()) == units);
    }
  }
}

TEST_CASE("strong Shoda pairs of cyclic groups are (G, K)") {
  for (int n : {1, 6, 12, 15}) {
    const auto g = groups::cyclic_group(n);
    const auto pairs = shoda::strong_shoda_pairs(g);
    CHECK(pairs.size() == groups::all_subgroups(g).size());
    for (const auto& p : pairs) CHECK(p.H.order() == n);
  }
}

TEST_CASE("strong Shoda pairs of Q8 and M16") {
  const auto g = q8();
  const auto pairs = shoda::strong_shoda_pairs(g);
  const auto a = groups::cyclic_subgroup(g, 1);
  const auto* p = find_pair(pairs, a, Subgroup::trivial(g));
  REQUIRE(p != nullptr);
  CHECK(find_pair(pairs, Subgroup::whole(g), Subgroup::whole(g)) != nullptr);
  for (const auto& sp : pairs) {
    CHECK(shoda::satisfies_ss1(g, sp.H, sp.K));
    CHECK(shoda::satisfies_ss2(g, sp.H, sp.K));
    CHECK(shoda::satisfies_ss3(g, sp.H, sp.K));
  }
  CHECK(shoda::stabilizer_E(g, *p, 3) == Subgroup::whole(g));
  const auto shape = shoda::component_shape(g, *p, Subgroup::whole(g), 3, 1);
  CHECK(shape.matrix_size == 2);
  CHECK(shape.degree_over_F == 1);
  CHECK(shape.printed_numerator == 1);
  CHECK(shape.printed_denominator == 4);

  const auto m = m16();
  const auto mp = shoda::strong_shoda_pairs(m);
  const auto* q = find_pair(mp, groups::cyclic_subgroup(m, 1), Subgroup::trivial(m));
  REQUIRE(q != nullptr);
  const auto e = shoda::stabilizer_E(m, *q, 3);
  CHECK(e == groups::cyclic_subgroup(m, 1));
  // every generator class has the same stabilizer
  for (const auto& c : shoda::cyclotomic_classes(8, 3)) CHECK(shoda::stabilizer_of_class(m, *q, c) == e);
  const auto shape16 = shoda::component_shape(m, *q, e, 3, 1);
  CHECK(shape16.matrix_size == 2);
  CHECK(shape16.degree_over_F == 2);
}

TEST_CASE("pairs in non-nilpotent groups still satisfy SS1-SS3") {
  const auto s3 = groups::group_from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
  for (const auto& p : shoda::strong_shoda_pairs(s3)) {
    CHECK(shoda::satisfies_ss1(s3, p.H, p.K));
    CHECK(shoda::satisfies_ss3(s3, p.H, p.K));
  }
}

TEST_CASE("central decompositions") {
  auto dims = [](const galg::AlgebraPtr& alg) {
    const auto dec = shoda::central_decomposition(alg);
    std::vector<int> out;
    std::vector<galg::AlgebraElement> es;
    for (const auto& c : dec.components) {
      out.push_back(galg::ideal_dimension(c.e, galg::Side::two_sided));
      es.push_back(c.e);
    }
    CHECK(verify::check_central_decomposition(alg, es).passed());
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(dims(algebra(groups::cyclic_group(7), 2)) == std::vector<int>{1, 3, 3});
  CHECK(dims(algebra(q8(), 3)) == std::vector<int>{1, 1, 1, 1, 4});
  CHECK(dims(algebra(groups::cyclic_group(3), 2)) == std::vector<int>{1, 2});
  CHECK(dims(algebra(groups::cyclic_group(1), 2)) == std::vector<int>{1});
  CHECK(dims(algebra(m16(), 3)) == std::vector<int>{1, 1, 1, 1, 2, 2, 8});
  CHECK_THROWS_AS(shoda::central_decomposition(algebra(groups::cyclic_group(2), 2)), galg::AlgebraError);
}

TEST_CASE("trivial pair and component order") {
  const auto alg = algebra(groups::cyclic_group(7), 2);
  const auto dec = shoda::central_decomposition(alg);
  REQUIRE(dec.components.size() == 3);
  CHECK(dec.components[0].cls.exponents == std::vector<int>{1, 2, 4});
  CHECK(dec.components[2].cls.exponents == std::vector<int>{0});
  CHECK(dec.components[2].e == galg::averaging_idempotent(alg, Subgroup::whole(alg->group)));
}
