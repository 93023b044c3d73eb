#include <algorithm>
#include <functional>

#include "doctest.h"
#include "fga/pipeline.hpp"

using namespace fga;
namespace pl = fga::pipeline;

namespace {

pl::json group_json(const std::string& text) { return pl::json::parse(text); }

pl::Decomposition run(const std::string& group, std::uint32_t q, std::uint32_t m = 1, pl::Options opt = {}) {
  return pl::decompose(pl::group_from_json(group_json(group)), pl::FieldSpec{q, m, std::nullopt}, opt);
}

int exit_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const pl::PipelineError& e) {
    return e.exit_code();
  }
  return 0;
}

const char* kQ8 = R"({"name": "Q8", "metacyclic": {"n": 4, "m": 2, "t": 2, "r": 3}})";

}  // namespace

TEST_CASE("group descriptions") {
  const auto c6 = pl::group_from_json(group_json(R"({"cyclic": 6})"));
  CHECK(c6.order() == 6);
  const auto s3 = pl::group_from_json(group_json(R"({"permutations": {"degree": 3, "generators": [[1,2,0],[1,0,2]]}})"));
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  const auto p = pl::group_from_json(group_json(R"({"direct_product": [{"cyclic": 2}, {"cyclic": 4}]})"));
  CHECK(p.order() == 8);
  CHECK(p.is_abelian());
  // the table form round-trips, fingerprint included
  const auto q8 = pl::group_from_json(group_json(kQ8));
  CHECK(pl::group_from_json(pl::group_to_json(q8)) == q8);
  auto bad = pl::group_to_json(q8);
  bad["fingerprint"] = "0000000000000000";
  CHECK(exit_code_of([&] { pl::group_from_json(bad); }) == pl::kExitVerification);
  CHECK(exit_code_of([&] { pl::group_from_json(group_json(R"({"cyclic": 200})")); }) == pl::kExitScope);
  CHECK(exit_code_of([&] { pl::group_from_json(group_json(R"({"cyclic": 200})"), 256); }) == 0);
  CHECK(exit_code_of([&] { pl::group_from_json(group_json(R"({"table": [[0,1],[0,1]]})")); }) == pl::kExitPrecondition);
  CHECK(exit_code_of([&] { pl::group_from_json(group_json(R"({"foo": 1})")); }) == pl::kExitPrecondition);
}

TEST_CASE("reduction G -> G/G_q") {
  const auto c6 = pl::group_from_json(group_json(R"({"cyclic": 6})"));
  const auto r = pl::reduce_group(c6, 2);
  CHECK(r.order() == 3);
  CHECK(pl::reduce_group(pl::group_from_json(group_json(kQ8)), 2).order() == 1);
  const auto c4 = pl::reduce_group(pl::group_from_json(group_json(R"({"cyclic": 12})")), 3);
  CHECK(c4.order() == 4);
  CHECK(c4.is_abelian());
  CHECK(std::count(c4.element_orders().begin(), c4.element_orders().end(), 4) == 2);
  CHECK(pl::reduce_group(c6, 5).order() == 6);
  const auto s3 = pl::group_from_json(group_json(R"({"permutations": {"degree": 3, "generators": [[1,2,0],[1,0,2]]}})"));
  CHECK(exit_code_of([&] { pl::reduce_group(s3, 2); }) == pl::kExitScope);
}

TEST_CASE("decompose: preconditions and scope") {
  CHECK(exit_code_of([] { run(R"({"cyclic": 2})", 2); }) == pl::kExitPrecondition);
  try {
    run(R"({"cyclic": 2})", 2);
  } catch (const pl::PipelineError& e) {
    CHECK(std::string(e.what()).find("group order not invertible") != std::string::npos);
  }
  CHECK(exit_code_of([] { run(R"({"cyclic": 3})", 4); }) == pl::kExitPrecondition);
  CHECK(exit_code_of([] { run(R"({"cyclic": 3})", 2, 17); }) == pl::kExitScope);
  pl::Options strict;
  strict.require_nilpotent = true;
  const char* s3 = R"({"permutations": {"degree": 3, "generators": [[1,2,0],[1,0,2]]}})";
  CHECK(exit_code_of([&] { run(s3, 5, 1, strict); }) == pl::kExitScope);
  const auto d = run(s3, 5);
  CHECK_FALSE(d.report.at("nilpotent").get<bool>());
  CHECK(d.report.at("components")[0].at("construction").is_null());
  CHECK(d.passed());
}

TEST_CASE("decompose: Q8 over F3 and C7 over F2") {
  const auto q8 = run(kQ8, 3);
  CHECK(q8.passed());
  const auto& comps = q8.report.at("components");
  CHECK(comps.size() == 5);
  int big = 0;
  for (const auto& c : comps) {
    if (c.at("measured").at("matrix_size") == 2) {
      ++big;
      CHECK(c.at("measured").at("degree_over_F") == 1);
      CHECK(c.at("construction").at("case") == "case2");
      CHECK(c.at("construction").at("idempotents").size() == 2);
      CHECK_FALSE(c.at("construction").contains("matrix_units"));
    }
  }
  CHECK(big == 1);
  const auto c7 = run(R"({"cyclic": 7})", 2);
  CHECK(c7.report.at("components").size() == 3);
}

TEST_CASE("reduce flag: C6 over F2 becomes F2 C3 = F2 + F4") {
  pl::Options opt;
  opt.reduce = true;
  const auto d = run(R"({"cyclic": 6})", 2, 1, opt);
  CHECK(d.passed());
  CHECK(d.report.at("group").at("order") == 3);
  CHECK(d.report.at("reduction").at("kernel_order") == 2);
  std::vector<int> dims;
  for (const auto& c : d.report.at("components")) dims.push_back(c.at("measured").at("D").get<int>());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 2});
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  pl::Options a, b;
  a.matrix_units = b.matrix_units = true;
  a.jobs = 1;
  b.jobs = 4;
  const char* g = R"({"direct_product": [{"cyclic": 3}, {"metacyclic": {"n": 4, "m": 2, "t": 2, "r": 3}}]})";
  const auto r1 = pl::dump(run(g, 5, 1, a).report);
  const auto r2 = pl::dump(run(g, 5, 1, b).report);
  const auto r3 = pl::dump(run(g, 5, 1, b).report);
  CHECK(r1 == r2);
  CHECK(r2 == r3);
}

TEST_CASE("verify: round trip and tampering") {
  pl::Options opt;
  opt.matrix_units = true;
  const auto d = run(R"({"metacyclic": {"n": 8, "m": 2, "t": 0, "r": 5}})", 3, 1, opt);
  CHECK(d.passed());
  const auto persisted = pl::json::parse(pl::dump(d.report));
  const auto ok = pl::verify_report(persisted);
  CHECK_MESSAGE(ok.passed(), ok.checks.first_failure());

  // without stored matrix units they are rebuilt from beta and T
  auto lean = persisted;
  for (auto& c : lean["components"]) c["construction"].erase("matrix_units");
  CHECK(pl::verify_report(lean).passed());

  auto t1 = persisted;
  auto& coeffs = t1["components"][0]["e_C"]["coeffs"];
  coeffs["0"] = pl::json::array({(coeffs["0"][0].get<int>() + 1) % 3});
  const auto v1 = pl::verify_report(t1);
  CHECK_FALSE(v1.passed());
  CHECK(v1.checks.first_failure().find("central decomposition") != std::string::npos);

  auto t2 = persisted;
  std::size_t target = 0;
  for (std::size_t i = 0; i < t2["components"].size(); ++i)
    if (t2["components"][i]["measured"]["matrix_size"] == 2) target = i;
  auto& units = t2["components"][target]["construction"]["matrix_units"];
  std::swap(units[0][1], units[1][0]);
  const auto v2 = pl::verify_report(t2);
  CHECK_FALSE(v2.passed());
  CHECK(v2.checks.first_failure().find("matrix units") != std::string::npos);

  auto t3 = persisted;
  t3["group"]["table"][1][1] = 0;
  const auto v3 = pl::verify_report(t3);
  CHECK_FALSE(v3.passed());
  CHECK(v3.checks.first_failure().find("group table") != std::string::npos);

  // a valid table that is not the one fingerprinted
  auto t5 = persisted;
  t5["group"] = pl::group_to_json(groups::cyclic_group(16));
  t5["group"]["fingerprint"] = persisted["group"]["fingerprint"];
  const auto v5 = pl::verify_report(t5);
  CHECK_FALSE(v5.passed());
  CHECK(v5.checks.first_failure().find("fingerprint") != std::string::npos);

  auto t4 = persisted;
  t4["components"][target]["measured"]["matrix_size"] = 4;
  CHECK_FALSE(pl::verify_report(t4).passed());

  CHECK(exit_code_of([] { pl::verify_report(pl::json::object()); }) == pl::kExitPrecondition);
}

TEST_CASE("codes by selector") {
  const auto d = run(R"({"cyclic": 7})", 2);
  const auto r = pl::codes_report(d, "e0+C1");
  REQUIRE(r.at("codes").size() == 1);
  const auto& c = r.at("codes")[0];
  CHECK(c.at("length") == 7);
  CHECK(c.at("dimension") == 4);
  CHECK(c.at("min_distance") == 3);
  CHECK(c.at("left_ideal") == true);
  CHECK(c.at("generator_matrix").size() == 4);

  // C3 picks the faithful component whose class holds 3, i.e. the other one
  const auto r3 = pl::codes_report(d, "C3");
  CHECK(r3.at("codes")[0].at("dimension") == 3);
  CHECK(r3.at("codes")[0].at("min_distance") == 4);

  const auto all = pl::codes_report(d, "all-central");
  CHECK(all.at("codes").size() == 3);
  CHECK(exit_code_of([&] { pl::codes_report(d, "x1"); }) == pl::kExitPrecondition);
  CHECK(exit_code_of([&] { pl::codes_report(d, "c9"); }) == pl::kExitPrecondition);
  CHECK(exit_code_of([&] { pl::codes_report(d, "C0"); }) == pl::kExitPrecondition);

  const auto big = pl::codes_report(d, "e0+C1", 8);
  CHECK(big.at("codes")[0].at("min_distance").is_null());
  CHECK(big.at("codes")[0].contains("min_distance_note"));

  const auto q8 = run(kQ8, 3);
  const auto prim = pl::codes_report(q8, "all-primitive");
  CHECK(prim.at("codes").size() == 6);
  int total = 0;
  for (const auto& code : prim.at("codes")) total += code.at("dimension").get<int>();
  CHECK(total == 8);
  std::string matrix;
  for (std::size_t i = 0; i < q8.components.size(); ++i)
    if (q8.components[i].shape.N == 2) matrix = std::to_string(i);
  REQUIRE_FALSE(matrix.empty());
  CHECK(pl::codes_report(q8, "p" + matrix + ".0+p" + matrix + ".1").at("codes")[0].at("dimension") == 4);
  CHECK(pl::codes_report(q8, "p" + matrix + ".0").at("codes")[0].at("dimension") == 2);
}
