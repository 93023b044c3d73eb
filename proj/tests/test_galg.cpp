#include "doctest.h"
#include "fga/galg.hpp"

using namespace fga;
using galg::AlgebraElement;
using groups::Subgroup;

namespace {

galg::AlgebraPtr algebra(groups::FiniteGroup g, std::uint32_t q, std::uint32_t m = 1) {
  return galg::make_algebra(std::move(g), ff::make_small_field(ff::make_field(q, m)));
}

AlgebraElement elem(const galg::AlgebraPtr& a, std::vector<galg::Code> c) { return AlgebraElement(a, std::move(c)); }

}  // namespace

TEST_CASE("arithmetic") {
  const auto a = algebra(groups::cyclic_group(2), 3);
  const auto x = elem(a, {1, 1});
  CHECK(x * x == elem(a, {2, 2}));
  CHECK(AlgebraElement::one(a) * x == x);
  CHECK(x.conjugate(0) == x);
  CHECK_THROWS_AS(elem(a, {3, 0}), galg::AlgebraError);
}

TEST_CASE("serial and OpenMP kernels agree") {
  const auto g = groups::direct_product(groups::cyclic_group(3), groups::metacyclic_group(8, 2, 4, 7));
  for (std::uint32_t m : {1u, 2u}) {
    const auto a = algebra(g, 5, m);
    std::vector<galg::Code> x(g.order()), y(g.order());
    std::uint32_t s = 7;
    for (int i = 0; i < g.order(); ++i) {
      s = s * 1103515245u + 12345u;
      x[i] = (s >> 8) % a->field->size();
      s = s * 1103515245u + 12345u;
      y[i] = (s >> 8) % a->field->size();
    }
    std::vector<galg::Code> o1(g.order()), o2(g.order());
    galg::kernels::convolve_serial(*a, x, y, o1);
    galg::kernels::convolve_omp(*a, x, y, o2);
    CHECK(o1 == o2);
  }
}

TEST_CASE("averaging idempotents and epsilon") {
  const auto a = algebra(groups::cyclic_group(2), 3);
  CHECK(galg::averaging_idempotent(a, Subgroup::whole(a->group)) == elem(a, {2, 2}));
  CHECK(galg::averaging_idempotent(a, Subgroup::trivial(a->group)) == AlgebraElement::one(a));
  CHECK(galg::epsilon(a, Subgroup::whole(a->group), Subgroup::trivial(a->group)) == elem(a, {2, 1}));
  const auto b = algebra(groups::cyclic_group(3), 2);
  CHECK(galg::averaging_idempotent(b, Subgroup::whole(b->group)) == elem(b, {1, 1, 1}));
  const auto c = algebra(groups::cyclic_group(4), 3);
  CHECK(galg::epsilon(c, Subgroup::whole(c->group), Subgroup::trivial(c->group)) == elem(c, {2, 0, 1, 0}));
  const auto bad = algebra(groups::cyclic_group(2), 2);
  CHECK_THROWS_AS(galg::averaging_idempotent(bad, Subgroup::whole(bad->group)), galg::AlgebraError);
}

TEST_CASE("epsilon_C") {
  const auto b = algebra(groups::cyclic_group(3), 2);
  const auto t3 = galg::make_trace_table(*b->field, 3);
  CHECK(t3.values == std::vector<galg::Code>{0, 1, 1});
  const auto whole = Subgroup::whole(b->group), one = Subgroup::trivial(b->group);
  const auto e = galg::epsilon_C(b, whole, one, 1, 1, t3);
  CHECK(e == elem(b, {0, 1, 1}));
  CHECK(galg::epsilon_C(b, whole, one, 1, 2, t3) == e);

  // C_4 over F_3: tr(xi_4^i) from F_9 is (2, 0, 1, 0) for i = 0..3, scaled by 4^{-1} = 1
  const auto c = algebra(groups::cyclic_group(4), 3);
  const auto t4 = galg::make_trace_table(*c->field, 4);
  CHECK(t4.values == std::vector<galg::Code>{2, 0, 1, 0});
  const auto ec = galg::epsilon_C(c, Subgroup::whole(c->group), Subgroup::trivial(c->group), 1, 1, t4);
  CHECK(galg::is_idempotent(ec));
  CHECK(ec == galg::epsilon(c, Subgroup::whole(c->group), Subgroup::trivial(c->group)));
  CHECK(galg::epsilon_C(c, Subgroup::whole(c->group), Subgroup::trivial(c->group), 1, 3, t4) == ec);
}

TEST_CASE("e_C and conjugate counts") {
  const auto q8 = groups::metacyclic_group(4, 2, 2, 3);
  const auto a = algebra(q8, 3);
  const auto h = groups::cyclic_subgroup(q8, 1);
  const auto t = galg::make_trace_table(*a->field, 4);
  const auto eps = galg::epsilon_C(a, h, Subgroup::trivial(q8), 1, 1, t);
  const auto e = galg::e_C(a, h, Subgroup::trivial(q8), 1, 1, t);
  CHECK(e == eps);
  CHECK(galg::is_central(e));
  CHECK(galg::ideal_dimension(e, galg::Side::two_sided) == 4);
  CHECK(galg::ideal_dimension(AlgebraElement::one(a), galg::Side::two_sided) == 8);
  CHECK(galg::ideal_dimension(galg::averaging_idempotent(a, Subgroup::whole(q8)), galg::Side::two_sided) == 1);

  const auto m16 = groups::metacyclic_group(8, 2, 0, 5);
  const auto b = algebra(m16, 3);
  const auto hb = groups::cyclic_subgroup(m16, 1);
  const auto t8 = galg::make_trace_table(*b->field, 8);
  const auto eb = galg::epsilon_C(b, hb, Subgroup::trivial(m16), 1, 1, t8);
  CHECK(galg::centralizer_in_G(eb) == hb);
  const auto sum = galg::e_C(b, hb, Subgroup::trivial(m16), 1, 1, t8);
  CHECK(sum == eb + eb.conjugate(8));
  CHECK(galg::is_central(sum));
  CHECK(galg::is_idempotent(sum));
}

TEST_CASE("rational epsilon is a positive multiple") {
  const auto g = groups::cyclic_group(6);
  const auto v = galg::scaled_rational_epsilon(g, Subgroup::whole(g), Subgroup::trivial(g));
  // (2 - (1 + a^3)) (3 - (1 + a^2 + a^4)) = (1 - a^3)(2 - a^2 - a^4)
  CHECK(v == galg::IntVector{2, 1, -1, -2, -1, 1});
}
