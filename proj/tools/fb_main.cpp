#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fb/cli.hpp"
#include "fb/error.hpp"

namespace {

const char* describe(const std::string& command) {
  if (command == "resolve") return "minimal free resolution, Betti numbers and syzygy lengths";
  if (command == "hk") return "Hilbert-Kunz sequence of the maximal ideal";
  if (command == "beta") return "Frobenius Betti sequence, or the exact vanishing test with --exact";
  if (command == "mu") return "Frobenius mu sequence";
  if (command == "diagnose1") return "one-dimensional vanishing and projective dimension diagnosis";
  if (command == "syz") return "syzygy length survey with law checks";
  return "limit laws and oracle cross-checks";
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fb::Error(fb::ErrorKind::Io, "cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw fb::Error(fb::ErrorKind::Io, "cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius Betti numbers, mu numbers and Hilbert-Kunz estimates over F_p[x]/I"};
  app.require_subcommand(1, 1);

  std::string input, json_path, csv_path, cache_dir;
  std::size_t idx = 0, steps = 0;
  std::int64_t degree_bound = 0;
  fb::RunFlags flags;
  std::vector<CLI::App*> subs;
  for (const auto& name : fb::commands()) {
    auto* sub = app.add_subcommand(name, describe(name));
    sub->add_option("-i,--input", input, ".fbr problem file ('-' for stdin)")->required();
    sub->add_option("--idx", idx, "homological index");
    sub->add_option("--emax", flags.emax, "largest Frobenius exponent e")->check(CLI::Range(1u, 12u));
    sub->add_option("--steps", steps, "resolution length or survey depth");
    sub->add_flag("--exact", flags.exact, "exact one-dimensional decision instead of a sequence");
    sub->add_option("--degree-bound", degree_bound, "degree bound for the degreewise oracle");
    sub->add_option("--threads", flags.threads, "concurrent e-levels")->check(CLI::Range(1, 256));
    sub->add_option("--cache-dir", cache_dir, "cache directory (default $FB_CACHE_DIR)");
    sub->add_option("--seed", flags.seed, "seed for random parameter candidates");
    sub->add_option("--json", json_path, "also write the report to this file");
    sub->add_option("--csv", csv_path, "write the sequence table e,q,raw,normalized");
    sub->add_option("--max-gb-size", flags.max_gb_size, "cap on Groebner basis size");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = nullptr;
  for (auto* s : subs)
    if (s->parsed()) sub = s;
  const std::string command = sub->get_name();
  if (sub->count("--idx")) flags.idx = idx;
  if (sub->count("--steps")) flags.steps = steps;
  if (sub->count("--degree-bound")) flags.degree_bound = static_cast<fb::Degree>(degree_bound);
  if (sub->count("--cache-dir")) flags.cache_dir = cache_dir;

  try {
    auto problem = fb::parse_problem(read_input(input));
    auto report = fb::run(command, problem, flags);
    if (!csv_path.empty()) {
      if (auto table = fb::csv_table(report["result"])) write_file(csv_path, *table);
      else report["warnings"].push_back("--csv ignored: '" + command + "' has no sequence table");
    }
    std::string text = report.dump(2) + "\n";
    if (!json_path.empty()) write_file(json_path, text);
    std::cout << text;
    return 0;
  } catch (const fb::Error& e) {
    std::cerr << "fb: " << fb::to_string(e.kind()) << ": " << e.what() << "\n";
    return fb::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "fb: error: " << e.what() << "\n";
    return 1;
  }
}
