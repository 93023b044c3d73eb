#pragma once

// End-to-end decomposition with JSON reports: group files, field
// specifications, the reduction G -> G/G_q, decomposition, re-verification of
// persisted reports and code extraction by selector.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fga/codes.hpp"
#include "fga/construct.hpp"
#include "fga/galg.hpp"
#include "fga/shoda.hpp"
#include "fga/verify.hpp"
#include "json.hpp"

namespace fga::pipeline {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitScope = 4;

class PipelineError : public std::runtime_error {
 public:
  PipelineError(int exit_code, const std::string& what) : std::runtime_error(what), code_(exit_code) {}
  int exit_code() const { return code_; }

 private:
  int code_;
};

struct FieldSpec {
  std::uint32_t q = 0;
  std::uint32_t m = 1;
  /// Ascending coefficients, monic; default is the least irreducible.
  std::optional<ff::Poly> modulus;
};

struct Options {
  bool matrix_units = false;
  bool reduce = false;
  bool require_nilpotent = false;
  int max_order = groups::kDefaultMaxOrder;
  int jobs = 0;
};

/// Accepts {"table"}, {"cyclic"}, {"metacyclic": {n, m, t, r}},
/// {"permutations": {degree, generators}} or {"direct_product": [a, b]},
/// each with an optional "name".
groups::FiniteGroup group_from_json(const json& j, int max_order = groups::kDefaultMaxOrder);
groups::FiniteGroup load_group(const std::string& path, int max_order = groups::kDefaultMaxOrder);
json group_to_json(const groups::FiniteGroup& g);

ff::SmallFieldPtr make_base_field(const FieldSpec& spec);
json field_to_json(const ff::SmallField& f);

json element_to_json(const galg::AlgebraElement& a);
galg::AlgebraElement element_from_json(const galg::AlgebraPtr& alg, const json& j);

/// G/G_q for nilpotent G, G_q the Sylow q-subgroup.
groups::FiniteGroup reduce_group(const groups::FiniteGroup& g, std::uint32_t q);

struct ComponentResult {
  verify::Shape shape;
  std::optional<construct::IdempotentSet> set;
  std::optional<construct::MatrixUnits> units;
  verify::Report checks;
  std::vector<std::string> notes;
};

struct Decomposition {
  galg::AlgebraPtr alg;
  shoda::CentralDecomposition central;
  std::vector<ComponentResult> components;
  verify::Report checks;
  /// Checks that are reported but do not decide the verdict.
  verify::Report informative;
  json report;

  bool passed() const;
};

Decomposition decompose(groups::FiniteGroup g, const FieldSpec& field, const Options& opt);

/// Canonical serialisation used for every persisted report.
std::string dump(const json& j);

struct Verdict {
  verify::Report checks;
  bool passed() const { return checks.passed(); }
};

/// Re-checks a persisted decomposition report from its own data, then
/// recomputes the central idempotents and compares.
Verdict verify_report(const json& report, int jobs = 0);

/// Selector terms joined by '+': e0, C<j>, c<i>, p<i>.<t>; or one of the
/// keywords all-primitive and all-central.
json codes_report(const Decomposition& dec, const std::string& selector,
                  std::uint64_t bound = codes::kDefaultEnumerationBound);

}  // namespace fga::pipeline
