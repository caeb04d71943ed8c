// polyrep: batch verification front end.
//
// Subcommands: symrank, heisenberg, extensions, rdim, tables, verify-all.
// Exit codes: 0 all assertions pass, 1 assertion failure, 2 usage/input
// error.  JSON reports are timing-free and byte-stable; timing and cache
// diagnostics go to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "polyrep/fixtures.hpp"
#include "polyrep/verify.hpp"

namespace {

using polyrep::ReportRecord;

void print_report(const ReportRecord& rep) {
  for (const auto& a : rep.assertions)
    std::cout << (a.pass ? "[PASS] " : "[FAIL] ") << a.name << ": computed " << a.computed
              << ", expected " << a.expected << "\n";
  std::cout << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.assertions.size()
            << " assertions)\n";
  std::cerr << "wall time: " << rep.wall_seconds << "s\n";
}

void write_json(const ReportRecord& rep, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  out << rep.to_json().dump(2) << "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

int finish(const ReportRecord& rep, const std::string& json_out) {
  write_json(rep, json_out);
  print_report(rep);
  return rep.pass() ? 0 : 1;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("POLYREP_CACHE_DIR")) return env;
  return ".polyrep-cache";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyrep: exact verification of finite group computations"};
  app.require_subcommand(1);

  std::string lattice = "A1", json_out, csv_out;
  std::string cache_dir = default_cache_dir();
  int rank = 0, modulus = 4, p = 3, jobs = 1;
  bool allow_large = false, no_b8 = false;
  std::string n_filter, p_filter, recipe;

  auto* sym = app.add_subcommand("symrank", "symmetric rank of L/dL under the Weyl group");
  sym->add_option("--lattice", lattice, "A1, G2, A3, F4, D5, E6 or B")->required();
  sym->add_option("--rank", rank, "rank for the B family");
  sym->add_option("--modulus", modulus, "d in {2, 3, 4, 6}");
  sym->add_option("--json-out", json_out, "write the report as JSON");

  auto* heis = app.add_subcommand("heisenberg", "Heisenberg matrices and their PGL_p image");
  heis->add_option("--p", p, "odd prime (3 or 5; 7 needs --allow-large)")->required();
  heis->add_flag("--allow-large", allow_large, "permit the hashed-product path past 10^4");
  heis->add_option("--json-out", json_out, "write the report as JSON");
  heis->add_option("--cache-dir", cache_dir, "character table cache directory");

  auto* ext = app.add_subcommand("extensions", "polyhedral extension catalog audit");
  ext->add_option("--N", n_filter, "kernel filter: 1, c2, c2c2");
  ext->add_option("--P", p_filter, "quotient filter: a4, s4, a5");
  ext->add_option("--json-out", json_out, "write the report as JSON");
  ext->add_option("--csv-out", csv_out, "write the rows as CSV");
  ext->add_option("--cache-dir", cache_dir, "character table cache directory");
  ext->add_option("--jobs", jobs, "parallelism across catalog records");

  auto* rdim = app.add_subcommand("rdim", "minimal faithful representation dimension");
  rdim->add_option("--group", recipe, "recipe, e.g. \"a4 x c2\"")->required();
  rdim->add_option("--json-out", json_out, "write the report as JSON");
  rdim->add_option("--cache-dir", cache_dir, "character table cache directory");

  auto* tables = app.add_subcommand("tables", "emit the two reference tables as CSV");
  tables->add_option("--csv-out", csv_out, "prefix: writes <prefix>.table1.csv and .table2.csv");
  tables->add_option("--cache-dir", cache_dir, "character table cache directory");
  tables->add_option("--jobs", jobs, "parallelism across catalog records");

  auto* all = app.add_subcommand("verify-all", "run the full acceptance suite");
  all->add_option("--json-out", json_out, "write the aggregate report as JSON");
  all->add_option("--cache-dir", cache_dir, "character table cache directory");
  all->add_option("--jobs", jobs, "parallelism across catalog records");
  all->add_flag("--no-b8", no_b8, "skip the optional B8 row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  polyrep::VerifyOptions opt;
  opt.cache_dir = cache_dir;
  opt.jobs = jobs;
  opt.with_b8 = !no_b8;

  try {
    if (sym->parsed()) {
      if (lattice == "B" && rank < 1) {
        std::cerr << "error: --rank is required for the B family\n";
        return 2;
      }
      return finish(polyrep::run_symrank(lattice, rank, modulus), json_out);
    }
    if (heis->parsed()) {
      if (p % 2 == 0 || p < 3) {
        std::cerr << "error: p must be an odd prime\n";
        return 2;
      }
      return finish(polyrep::run_heisenberg(p, allow_large, opt), json_out);
    }
    if (ext->parsed()) {
      ReportRecord rep = polyrep::run_extensions(n_filter, p_filter, opt);
      if (!csv_out.empty()) write_file(csv_out, rep.values["csv"].get<std::string>());
      return finish(rep, json_out);
    }
    if (rdim->parsed()) return finish(polyrep::run_rdim_recipe(recipe, opt), json_out);
    if (tables->parsed()) {
      std::string t1 = polyrep::table1_csv();
      ReportRecord audit = polyrep::run_extensions("", "", opt);
      std::string t2 = audit.values["csv"].get<std::string>();
      std::cout << t1 << "\n" << t2;
      if (!csv_out.empty()) {
        write_file(csv_out + ".table1.csv", t1);
        write_file(csv_out + ".table2.csv", t2);
      }
      return audit.pass() ? 0 : 1;
    }
    if (all->parsed()) return finish(polyrep::run_verify_all(opt), json_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
