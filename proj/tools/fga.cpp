#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fga/pipeline.hpp"

namespace pl = fga::pipeline;

namespace {

struct Common {
  std::string group;
  std::uint32_t q = 0;
  std::uint32_t m = 1;
  std::string modulus;
  std::string out;
  int max_order = fga::groups::kDefaultMaxOrder;
  int jobs = 0;
};

pl::FieldSpec field_spec(const Common& c) {
  pl::FieldSpec spec{c.q, c.m, std::nullopt};
  if (!c.modulus.empty()) {
    fga::ff::Poly p;
    std::stringstream ss(c.modulus);
    for (std::string tok; std::getline(ss, tok, ',');) {
      try {
        p.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
      } catch (const std::exception&) {
        throw pl::PipelineError(pl::kExitPrecondition, "--modulus: bad coefficient '" + tok + "'");
      }
    }
    spec.modulus = std::move(p);
  }
  return spec;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pl::PipelineError(pl::kExitPrecondition, "cannot write " + path);
  out << text;
}

void add_group_flags(CLI::App* app, Common& c) {
  app->add_option("--group", c.group, "group description (JSON)")->required();
  app->add_option("--max-order", c.max_order, "largest accepted group order")->capture_default_str();
}

void add_field_flags(CLI::App* app, Common& c) {
  app->add_option("--q", c.q, "characteristic")->required();
  app->add_option("--m", c.m, "F = F_{q^m}")->capture_default_str();
  app->add_option("--modulus", c.modulus, "ascending coefficients of the defining polynomial, comma separated");
  app->add_option("--jobs", c.jobs, "worker threads (0 = all)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wedderburn decomposition of semisimple group algebras of nilpotent groups over finite fields"};
  app.require_subcommand(1);

  Common c;
  pl::Options opt;

  auto* dec = app.add_subcommand("decompose", "central and primitive idempotents with verification");
  add_group_flags(dec, c);
  add_field_flags(dec, c);
  dec->add_option("--out", c.out, "report path (default stdout)");
  dec->add_flag("--matrix-units", opt.matrix_units, "include matrix units in the report");
  dec->add_flag("--reduce", opt.reduce, "replace G by G/G_q first");
  dec->add_flag("--require-nilpotent", opt.require_nilpotent, "refuse non-nilpotent groups");

  auto* red = app.add_subcommand("reduce", "emit G/G_q as a Cayley table");
  add_group_flags(red, c);
  red->add_option("--q", c.q, "prime")->required();
  red->add_option("--out", c.out, "group path (default stdout)");

  std::string select;
  std::string export_prefix;
  std::uint64_t bound = fga::codes::kDefaultEnumerationBound;
  auto* cod = app.add_subcommand("codes", "left-ideal codes from selected idempotents");
  add_group_flags(cod, c);
  add_field_flags(cod, c);
  cod->add_flag("--reduce", opt.reduce, "replace G by G/G_q first");
  cod->add_option("--select", select, "e0, C<j>, c<i>, p<i>.<t> joined by '+', or all-primitive / all-central")
      ->required();
  cod->add_option("--out", c.out, "report path (default stdout)");
  cod->add_option("--export", export_prefix, "write each generator matrix to <prefix><label>.txt");
  cod->add_option("--bound", bound, "largest code size enumerated for the minimum distance")->capture_default_str();

  std::string report_path;
  auto* ver = app.add_subcommand("verify", "re-check a persisted decomposition report");
  ver->add_option("--report", report_path, "report path")->required();
  ver->add_option("--jobs", c.jobs, "worker threads (0 = all)");

  CLI11_PARSE(app, argc, argv);
  opt.max_order = c.max_order;
  opt.jobs = c.jobs;

  try {
    if (*dec) {
      const auto d = pl::decompose(pl::load_group(c.group, c.max_order), field_spec(c), opt);
      emit(c.out, pl::dump(d.report));
      for (const auto& n : d.report.at("notes")) std::cerr << "note: " << n.get<std::string>() << '\n';
      if (!d.passed()) {
        std::cerr << "verification failed: " << d.checks.first_failure();
        for (const auto& r : d.components)
          if (!r.checks.passed()) std::cerr << " " << r.checks.first_failure();
        std::cerr << '\n';
        return pl::kExitVerification;
      }
      return pl::kExitOk;
    }
    if (*red) {
      if (!fga::ff::is_prime(c.q)) throw pl::PipelineError(pl::kExitPrecondition, "--q must be prime");
      const auto g = pl::reduce_group(pl::load_group(c.group, c.max_order), c.q);
      emit(c.out, pl::dump(pl::group_to_json(g)));
      return pl::kExitOk;
    }
    if (*cod) {
      const auto d = pl::decompose(pl::load_group(c.group, c.max_order), field_spec(c), opt);
      const auto rep = pl::codes_report(d, select, bound);
      emit(c.out, pl::dump(rep));
      if (!export_prefix.empty()) {
        for (const auto& code : rep.at("codes")) {
          std::string text;
          for (const auto& row : code.at("generator_matrix")) text += row.get<std::string>() + "\n";
          const std::string base = export_prefix + code.at("label").get<std::string>();
          emit(base + ".txt", text);
          auto meta = code;
          meta.erase("generator_matrix");
          meta["field"] = rep.at("field");
          meta["group"] = rep.at("group");
          emit(base + ".json", pl::dump(meta));
        }
      }
      return pl::kExitOk;
    }
    if (*ver) {
      std::ifstream in(report_path);
      if (!in) throw pl::PipelineError(pl::kExitPrecondition, "cannot read " + report_path);
      pl::json j;
      try {
        in >> j;
      } catch (const pl::json::exception& e) {
        throw pl::PipelineError(pl::kExitPrecondition, std::string("malformed report: ") + e.what());
      }
      const auto v = pl::verify_report(j, c.jobs);
      if (!v.passed()) {
        std::cout << "FAIL " << v.checks.first_failure() << '\n';
        return pl::kExitVerification;
      }
      std::cout << "OK " << v.checks.checks.size() << " checks passed\n";
      return pl::kExitOk;
    }
  } catch (const pl::PipelineError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return pl::kExitPrecondition;
  }
  return pl::kExitOk;
}
