#pragma once

#include "specprime/io.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace specprime {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitAssertionFailure = 2;

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// SPECPRIME_SEED when set to an unsigned integer, otherwise kDefaultSeed.
/// Throws InvalidParameter on a malformed value.
std::uint64_t seed_from_env();

/// An input object may carry "expect": {"<check>": {"<result field>": value}};
/// a field that differs fails that check.
struct JobSpec {
  std::vector<Json> inputs;
  std::vector<std::string> checks;  // expanded; never contains "all"
  std::string output = "reports";
  bool emit_json = true;
  bool emit_dot = false;
};

/// Validates the job object: known checks ("all" expands), known formats,
/// and an array of inputs. Input schemas are validated by run_job.
JobSpec parse_job(const Json& j);

const std::vector<std::string>& all_checks();
/// Checks that produce a report for inputs of this kind.
std::vector<std::string> checks_for(InputKind kind);

struct RunOptions {
  std::size_t bruteforce_cap = kDefaultBruteforceCap;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;     // 0: hardware concurrency
  bool write_files = true;  // false: keep reports in memory only
  std::size_t ring_size_cap = kDefaultRingSizeCap;
};

struct RunResult {
  int exit_code = kExitOk;
  std::vector<Json> reports;       // input order, then check order
  std::vector<std::string> files;  // written artifacts
  std::vector<std::string> errors;
};

/// Parses every input, runs the applicable checks (inputs in parallel) and
/// writes <output>/reports.jsonl plus one file per input and check. Nothing
/// is written when any input fails to parse or when there are no inputs.
RunResult run_job(const JobSpec& job, const RunOptions& options);

/// Runs one check on one input spec, without writing anything.
Json run_check(const Json& input, const std::string& check, const RunOptions& options);

enum class DotSpace { spec, sprimes, xspace };
DotSpace parse_dot_space(const std::string& name);

/// Hasse diagram of Spec(R), S(R) or X(R) for a ring spec, or of the poset
/// itself (spec) and its X-space (xspace) for a poset spec.
std::string export_dot(DotSpace space, const Json& input, std::size_t ring_size_cap = kDefaultRingSizeCap);

}  // namespace specprime
