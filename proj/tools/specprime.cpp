#include "specprime/corpus.hpp"
#include "specprime/errors.hpp"
#include "specprime/jobs.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace specprime;

namespace {

void print_errors(const RunResult& r) {
  for (const auto& e : r.errors) std::cerr << "specprime: " << e << "\n";
}

int cmd_run(const std::string& path, const std::string& output, RunOptions options) {
  JobSpec job = parse_job(read_json_file(path));
  if (!output.empty()) job.output = output;
  const RunResult r = run_job(job, options);
  print_errors(r);
  if (!r.reports.empty())
    std::cerr << "specprime: " << r.reports.size() << " reports, " << r.errors.size() << " failing, "
              << r.files.size() << " files in " << job.output << "\n";
  return r.exit_code;
}

int cmd_check(const std::string& path, const std::vector<std::string>& checks, RunOptions options) {
  JobSpec job;
  Json requested = Json::array();
  for (const auto& c : checks) requested.push_back(c);
  job = parse_job(Json{{"checks", requested}});
  job.inputs.push_back(read_json_file(path));
  options.write_files = false;
  const RunResult r = run_job(job, options);
  for (const auto& rep : r.reports) std::cout << rep.dump() << "\n";
  print_errors(r);
  return r.exit_code;
}

int cmd_dot(const std::string& path, const std::string& space) {
  std::cout << export_dot(parse_dot_space(space), read_json_file(path));
  return kExitOk;
}

int cmd_corpus(const std::string& path) {
  const std::string text = default_job().dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write " + path);
  out << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semigroup primes, inverse-closed subsets of Spec and the maps between them"};
  app.require_subcommand(1);

  std::size_t cap = kDefaultBruteforceCap;
  unsigned threads = 0;
  app.add_option("--bruteforce-cap", cap, "Largest ring size for the exhaustive subset scan")
      ->check(CLI::Range(std::size_t{1}, kMaxBruteforceCap));
  app.add_option("--threads", threads, "Worker threads (0: one per core)");

  std::string job_path, output;
  auto* run = app.add_subcommand("run", "Run a job file and write reports");
  run->add_option("job", job_path, "Job JSON")->required();
  run->add_option("-o,--output", output, "Override the job's output directory");

  std::string check_path;
  bool all = false;
  std::vector<std::string> check_names;
  auto* check = app.add_subcommand("check", "Run checks on one input and print JSON lines");
  check->add_option("input", check_path, "Ring, poset, hom, profile or ufd JSON")->required();
  auto* all_flag = check->add_flag("--all", all, "Every applicable check");
  check->add_option("-c,--check", check_names, "A check to run (repeatable)")->excludes(all_flag);

  std::string dot_path, space = "sprimes";
  auto* dot = app.add_subcommand("dot", "Print a Hasse diagram in DOT");
  dot->add_option("--space", space, "spec, sprimes or xspace")
      ->check(CLI::IsMember({"spec", "sprimes", "xspace"}));
  dot->add_option("input", dot_path, "Ring or poset JSON")->required();

  std::string corpus_path;
  auto* corpus = app.add_subcommand("corpus", "Print the default corpus job");
  corpus->add_option("-o,--output", corpus_path, "Write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }

  try {
    RunOptions options;
    options.bruteforce_cap = cap;
    options.threads = threads;
    options.seed = seed_from_env();
    if (*run) return cmd_run(job_path, output, options);
    if (*check) return cmd_check(check_path, all || check_names.empty() ? std::vector<std::string>{"all"} : check_names, options);
    if (*dot) return cmd_dot(dot_path, space);
    if (*corpus) return cmd_corpus(corpus_path);
  } catch (const InvariantViolation& e) {
    std::cerr << "specprime: " << e.kind() << ": " << e.what() << "\n";
    return kExitAssertionFailure;
  } catch (const Error& e) {
    std::cerr << "specprime: " << e.kind() << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "specprime: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
