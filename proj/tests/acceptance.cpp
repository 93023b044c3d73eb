// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <string>
#include <vector>

#include "fga/pipeline.hpp"

using namespace fga;
namespace pl = fga::pipeline;
using groups::FiniteGroup;

namespace {

struct Case {
  std::string group;
  std::string field;
  pl::Decomposition dec;
};

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

FiniteGroup named(FiniteGroup g, std::string name) {
  g.set_name(std::move(name));
  return g;
}

std::vector<FiniteGroup> corpus_groups() {
  using namespace groups;
  std::vector<FiniteGroup> out;
  for (int n = 1; n <= 30; ++n) out.push_back(named(cyclic_group(n), "C" + std::to_string(n)));
  const auto q8 = metacyclic_group(4, 2, 2, 3, "Q8");
  const auto d8 = metacyclic_group(4, 2, 0, 3, "D8");
  out.push_back(direct_product(cyclic_group(2), cyclic_group(2), "C2xC2"));
  out.push_back(direct_product(cyclic_group(2), cyclic_group(4), "C2xC4"));
  out.push_back(direct_product(cyclic_group(4), cyclic_group(4), "C4xC4"));
  out.push_back(d8);
  out.push_back(q8);
  out.push_back(metacyclic_group(8, 2, 0, 7, "D16"));
  out.push_back(metacyclic_group(8, 2, 4, 7, "Q16"));
  out.push_back(metacyclic_group(8, 2, 0, 5, "M16"));
  out.push_back(direct_product(cyclic_group(3), q8, "C3xQ8"));
  out.push_back(direct_product(cyclic_group(5), d8, "C5xD8"));
  out.push_back(direct_product(cyclic_group(3), cyclic_group(9), "C3xC9"));
  return out;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1},
                                                                       {7, 1}, {3, 2}, {5, 2}};

std::string field_name(std::uint32_t q, std::uint32_t m) {
  return "F" + std::to_string(m == 1 ? q : q * q);
}

bool has_prefix(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

// Every check whose name contains `key` passed; `seen` counts them.
bool checks_with(const verify::Report& r, const std::string& key, std::string& failure, int& seen) {
  for (const auto& c : r.checks) {
    if (c.name.find(key) == std::string::npos) continue;
    ++seen;
    if (!c.passed) {
      failure = c.name + (c.detail.empty() ? "" : ": " + c.detail);
      return false;
    }
  }
  return true;
}

void line(int n, const std::string& title, const Outcome& o, const std::string& summary) {
  std::printf("%s criterion %d: %s: %s\n", o.ok ? "PASS" : "FAIL", n, title.c_str(),
              o.ok ? summary.c_str() : o.detail.c_str());
}

}  // namespace

int main() {
  bool all = true;
  const auto start = std::chrono::steady_clock::now();

  // 1. corpus completeness
  std::vector<Case> corpus;
  Outcome c1;
  pl::Options opt;
  opt.matrix_units = true;
  for (const auto& g : corpus_groups()) {
    for (const auto& [q, m] : kFields) {
      if (g.order() % static_cast<int>(q) == 0) continue;
      const std::string label = g.name() + "/" + field_name(q, m);
      try {
        auto dec = pl::decompose(g, pl::FieldSpec{q, m, std::nullopt}, opt);
        std::string failure;
        int seen = 0;
        if (!checks_with(dec.checks, "central decomposition", failure, seen)) c1.fail(label + ": " + failure);
        if (seen < 5) c1.fail(label + ": central decomposition checks missing");
        corpus.push_back(Case{g.name(), field_name(q, m), std::move(dec)});
      } catch (const std::exception& e) {
        c1.fail(label + ": " + e.what());
      }
    }
  }
  const double corpus_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (corpus_seconds > 120.0) c1.fail("corpus took " + std::to_string(corpus_seconds) + " s");
  std::size_t n_components = 0;
  for (const auto& c : corpus) n_components += c.dec.components.size();
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu (group, field) pairs, %zu components, %.1f s", corpus.size(), n_components,
                corpus_seconds);
  line(1, "corpus completeness", c1, buf);
  all &= c1.ok;

  // 2. primitive-set exactness
  Outcome c2;
  std::size_t idempotents = 0;
  for (const auto& c : corpus) {
    for (std::size_t i = 0; i < c.dec.components.size(); ++i) {
      const auto& r = c.dec.components[i];
      const std::string label = c.group + "/" + c.field + " component " + std::to_string(i);
      if (!r.set) {
        c2.fail(label + ": no idempotent set");
        continue;
      }
      if (static_cast<int>(r.set->idempotents.size()) != r.shape.N) c2.fail(label + ": |set| != N");
      idempotents += r.set->idempotents.size();
      std::string failure;
      int seen = 0;
      if (!checks_with(r.checks, "idempotents:", failure, seen) || !checks_with(r.checks, "matrix units:", failure, seen) ||
          !checks_with(r.checks, "construction", failure, seen))
        c2.fail(label + ": " + failure);
      if (seen == 0) c2.fail(label + ": no checks recorded");
      if (!r.units || r.units->size() != static_cast<std::size_t>(r.shape.N)) c2.fail(label + ": matrix units missing");
    }
  }
  line(2, "primitive-set exactness", c2, std::to_string(idempotents) + " primitive idempotents verified");
  all &= c2.ok;

  // 3. named components
  Outcome c3;
  auto find = [&](const std::string& g, const std::string& f) -> const pl::Decomposition* {
    for (const auto& c : corpus)
      if (c.group == g && c.field == f) return &c.dec;
    return nullptr;
  };
  {
    const auto* q8 = find("Q8", "F3");
    int matches = 0;
    if (q8) {
      for (const auto& r : q8->components) {
        if (r.shape.N != 2) continue;
        ++matches;
        if (r.shape.d != 1) c3.fail("Q8/F3: the 2x2 component has d != 1");
        if (!r.set || r.set->witness.tag != construct::CaseTag::case2) c3.fail("Q8/F3: not built via case 2");
        else if (!r.set->witness.xy) c3.fail("Q8/F3: no x, y");
        else {
          const auto& f = *q8->alg->field;
          const auto [x, y] = *r.set->witness.xy;
          if (y == 0 || f.add(f.add(f.mul(x, x), f.mul(y, y)), f.one()) != 0) c3.fail("Q8/F3: x^2 + y^2 != -1");
        }
      }
    }
    if (matches != 1) c3.fail("Q8/F3: expected exactly one M_2(F_3) component, found " + std::to_string(matches));

    const auto* m16 = find("M16", "F3");
    bool found = false;
    if (m16) {
      for (std::size_t i = 0; i < m16->components.size(); ++i) {
        const auto& r = m16->components[i];
        const auto& comp = m16->central.components[i];
        if (r.shape.N == 2 && r.shape.d == 2 && comp.shape.E == m16->central.pairs[comp.pair_index].H) found = true;
      }
    }
    if (!found) c3.fail("M16/F3: no M_2(F_9) component with E = H");

    const auto* c3f2 = find("C3", "F2");
    bool f4 = false;
    if (c3f2)
      for (const auto& r : c3f2->components) f4 |= r.shape.N == 1 && r.shape.d == 2;
    if (!f4) c3.fail("C3/F2: no F_4 component");
  }
  line(3, "named components", c3, "Q8/F3 has M_2(F_3) via case 2, M16/F3 has M_2(F_9) with E = H, C3/F2 has F_4");
  all &= c3.ok;

  // 4. projection identities
  Outcome c4;
  std::size_t pairs = 0;
  for (const auto& c : corpus) {
    pairs += c.dec.central.pairs.size();
    int seen = 0;
    std::string failure;
    for (const auto& ch : c.dec.checks.checks) {
      if (!has_prefix(ch.name, "pair ")) continue;
      ++seen;
      if (!ch.passed) failure = ch.name;
    }
    if (!failure.empty()) c4.fail(c.group + "/" + c.field + ": " + failure);
    if (seen < 2 * static_cast<int>(c.dec.central.pairs.size())) c4.fail(c.group + "/" + c.field + ": checks missing");
  }
  line(4, "projection identities", c4, std::to_string(pairs) + " strong Shoda pairs checked");
  all &= c4.ok;

  // 5. the [7,4,3] code
  Outcome c5;
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto* c7 = find("C7", "F2");
    if (!c7) {
      c5.fail("C7/F2 missing");
    } else {
      const auto rep = pl::codes_report(*c7, "e0+C1");
      const auto& code = rep.at("codes")[0];
      if (code.at("length") != 7 || code.at("dimension") != 4 || code.at("min_distance") != 3)
        c5.fail("got " + code.dump());
      if (code.at("left_ideal") != true) c5.fail("not a left ideal");
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::snprintf(buf, sizeof buf, "e0+C1 in F2 C7 is [7,4,3] (%.2f ms)", ms);
  }
  line(5, "Hamming code", c5, buf);
  all &= c5.ok;

  // 6. corner rings
  Outcome c6;
  std::size_t corners = 0, mismatches = 0;
  for (const auto& c : corpus) {
    for (std::size_t i = 0; i < c.dec.components.size(); ++i) {
      const auto& r = c.dec.components[i];
      const auto& shape = c.dec.central.components[i].shape;
      const std::string label = c.group + "/" + c.field + " component " + std::to_string(i);
      std::string failure;
      int seen = 0;
      if (!checks_with(r.checks, "corner rings:", failure, seen)) c6.fail(label + ": " + failure);
      if (r.set && seen == 0) c6.fail(label + ": corner rings not checked");
      if (r.set) corners += r.set->idempotents.size();
      const std::uint64_t measured = static_cast<std::uint64_t>(c.dec.alg->field->degree()) * r.shape.d;
      const bool printed_matches = shape.printed_denominator == 1 && shape.printed_numerator == measured;
      if (!printed_matches) {
        ++mismatches;
        if (r.notes.empty()) c6.fail(label + ": exponent mismatch not reported");
      }
      if (shape.exponent != measured) c6.fail(label + ": [E:H] prediction differs from the measured exponent");
    }
  }
  line(6, "corner-ring fields", c6,
       std::to_string(corners) + " corners are fields of the measured degree; " + std::to_string(mismatches) +
           " components report m*o/[E:K] != measured exponent");
  all &= c6.ok;

  // 7. modular reduction
  Outcome c7;
  try {
    pl::Options r;
    r.reduce = true;
    const auto dec = pl::decompose(groups::cyclic_group(6), pl::FieldSpec{2, 1, std::nullopt}, r);
    std::vector<int> dims;
    for (const auto& comp : dec.components) dims.push_back(comp.shape.D);
    std::sort(dims.begin(), dims.end());
    if (dec.alg->group.order() != 3) c7.fail("reduced group has order " + std::to_string(dec.alg->group.order()));
    if (dims != std::vector<int>{1, 2}) c7.fail("component dimensions are not 1 + 2");
    if (!dec.passed()) c7.fail(dec.checks.first_failure());
  } catch (const std::exception& e) {
    c7.fail(e.what());
  }
  line(7, "modular reduction", c7, "F2 C6 reduces to F2 C3 = F2 + F4");
  all &= c7.ok;

  // 8. determinism
  Outcome c8;
  {
    int compared = 0;
    for (const char* name : {"C3xQ8", "M16", "C5xD8", "C21"}) {
      for (const auto& c : corpus) {
        if (c.group != name) continue;
        const auto& f = *c.dec.alg->field;
        pl::Options a = opt, b = opt;
        a.jobs = 1;
        b.jobs = 0;
        const pl::FieldSpec spec{f.characteristic(), f.degree(), std::nullopt};
        const auto r1 = pl::dump(pl::decompose(c.dec.alg->group, spec, a).report);
        const auto r2 = pl::dump(pl::decompose(c.dec.alg->group, spec, b).report);
        if (r1 != r2 || r1 != pl::dump(c.dec.report)) c8.fail(c.group + "/" + c.field + ": reports differ");
        ++compared;
      }
    }
    std::snprintf(buf, sizeof buf, "%d inputs decomposed three times with byte-identical reports", compared);
  }
  line(8, "determinism", c8, buf);
  all &= c8.ok;

  return all ? 0 : 1;
}
