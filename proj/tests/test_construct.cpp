#include "doctest.h"
#include "fga/construct.hpp"
#include "fga/verify.hpp"

using namespace fga;
using construct::CaseTag;
using groups::Subgroup;

namespace {

galg::AlgebraPtr algebra(groups::FiniteGroup g, std::uint32_t q, std::uint32_t m = 1) {
  return galg::make_algebra(std::move(g), ff::make_small_field(ff::make_field(q, m)));
}

struct Built {
  shoda::Component component;
  construct::IdempotentSet set;
  verify::Shape shape;
};

// Constructs and verifies every component; returns them for inspection.
std::vector<Built> build_all(const galg::AlgebraPtr& alg, construct::LiftChoice lift = construct::LiftChoice::least) {
  const auto dec = shoda::central_decomposition(alg);
  const auto traces = shoda::trace_tables(*alg->field, dec.pairs);
  std::vector<Built> out;
  for (const auto& c : dec.components) {
    const auto& pair = dec.pairs[c.pair_index];
    auto set = construct::build_idempotents(alg, pair, c.cls, traces.at(pair.index()), c.shape.E, lift);
    CHECK(set.e_C == c.e);
    const auto shape = verify::measure_shape(c.e);
    CHECK(shape.exact);
    const auto r = verify::check_idempotent_set(c.e, set.idempotents, shape);
    CHECK_MESSAGE(r.passed(), alg->group.name(), " component ", out.size(), ": ", r.first_failure());
    const auto mu = construct::matrix_units(set);
    const auto rm = verify::check_matrix_units(c.e, mu.units, mu.size());
    CHECK_MESSAGE(rm.passed(), rm.first_failure());
    out.push_back(Built{c, std::move(set), shape});
  }
  return out;
}

const Built* with_size(const std::vector<Built>& bs, int n) {
  for (const auto& b : bs)
    if (b.shape.N == n) return &b;
  return nullptr;
}

}  // namespace

TEST_CASE("Q8 over F_3 uses the quaternion case") {
  const auto alg = algebra(groups::metacyclic_group(4, 2, 2, 3, "Q8"), 3);
  const auto bs = build_all(alg);
  CHECK(bs.size() == 5);
  const auto* b = with_size(bs, 2);
  REQUIRE(b != nullptr);
  CHECK(b->shape.d == 1);
  CHECK(b->set.witness.tag == CaseTag::case2);
  CHECK(b->set.witness.n == 2);
  CHECK(b->set.witness.k == 0);
  CHECK(b->set.witness.b2 == 0);
  REQUIRE(b->set.witness.xy.has_value());
  CHECK(b->set.witness.xy->first == 1);
  CHECK(b->set.witness.xy->second == 1);
  CHECK(b->set.transversal.size() == 2);
  const auto mu = construct::matrix_units(b->set);
  CHECK(verify::multiply(mu.at(0, 1), mu.at(1, 0)) == mu.at(0, 0));
}

TEST_CASE("D8 over F_3 uses case 1(ii)") {
  const auto alg = algebra(groups::metacyclic_group(4, 2, 0, 3, "D8"), 3);
  const auto bs = build_all(alg);
  const auto* b = with_size(bs, 2);
  REQUIRE(b != nullptr);
  CHECK(b->set.witness.tag == CaseTag::case1ii);
  CHECK(b->set.witness.d == 2);
  CHECK(b->set.transversal == std::vector<int>{0, 1});
}

TEST_CASE("M16 over F_3 gives M_2(F_9) with E = H") {
  const auto g = groups::metacyclic_group(8, 2, 0, 5, "M16");
  const auto alg = algebra(g, 3);
  const auto bs = build_all(alg);
  const auto* b = with_size(bs, 2);
  REQUIRE(b != nullptr);
  CHECK(b->shape.d == 2);
  CHECK(b->component.shape.E == groups::cyclic_subgroup(g, 1));
  CHECK(b->set.witness.tag == CaseTag::case1i);
}

TEST_CASE("cyclic components are single idempotents") {
  const auto alg = algebra(groups::cyclic_group(3), 2);
  const auto bs = build_all(alg);
  REQUIRE(bs.size() == 2);
  CHECK(bs[0].shape.N == 1);
  CHECK(bs[0].shape.d == 2);
  CHECK(bs[0].set.witness.tag == CaseTag::cyclic_G_equals_H);
  CHECK(bs[0].set.idempotents.size() == 1);
}

TEST_CASE("mixed 2- and 2'-parts") {
  const auto c3q8 = groups::direct_product(groups::cyclic_group(3), groups::metacyclic_group(4, 2, 2, 3), "C3xQ8");
  for (std::uint32_t q : {5u, 7u}) build_all(algebra(c3q8, q));
  build_all(algebra(groups::direct_product(groups::cyclic_group(5), groups::metacyclic_group(4, 2, 0, 3)), 3));
  build_all(algebra(groups::metacyclic_group(8, 2, 0, 7, "D16"), 7));
  build_all(algebra(groups::metacyclic_group(8, 2, 4, 7, "Q16"), 3, 2));
  // odd order: the 2-part is trivial
  const auto heis = groups::metacyclic_group(9, 3, 0, 4, "C9:C3");
  CHECK(groups::is_nilpotent(heis));
  const auto bs = build_all(algebra(heis, 2));
  CHECK(with_size(bs, 3) != nullptr);
}

TEST_CASE("C_12 element split") {
  const auto alg = algebra(groups::cyclic_group(12), 5);
  const auto dec = shoda::central_decomposition(alg);
  for (const auto& p : dec.pairs) {
    if (p.K.order() != 1) continue;
    const auto s = construct::split_EK(alg->group, p, Subgroup::whole(alg->group));
    CHECK(s.ek.lift[s.a2] == 9);
    CHECK(s.ek.lift[s.a2prime] == 4);
  }
}

TEST_CASE("idempotents do not depend on the choice of lifts") {
  for (const auto& [g, q] : {std::pair{groups::direct_product(groups::cyclic_group(3), groups::metacyclic_group(4, 2, 2, 3)), 7u},
                             {groups::metacyclic_group(8, 2, 4, 7), 3u},
                             {groups::direct_product(groups::cyclic_group(5), groups::metacyclic_group(4, 2, 0, 3)), 3u}}) {
    const auto alg = algebra(g, q);
    const auto a = build_all(alg, construct::LiftChoice::least);
    const auto b = build_all(alg, construct::LiftChoice::greatest);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].set.beta == b[i].set.beta);
      CHECK(a[i].set.idempotents == b[i].set.idempotents);
    }
  }
}
