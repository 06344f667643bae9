#include "specprime/corpus.hpp"
#include "specprime/errors.hpp"
#include "specprime/jobs.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace specprime;

namespace {

// JSON crosses the boundary as text; the Python wrapper does the (de)serialization.
Json parse(const std::string& text) { return parse_json_text(text, "argument"); }

std::vector<std::vector<std::size_t>> index_lists(const std::vector<ElementSet>& sets) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : sets) out.push_back(indices_of(s));
  return out;
}

std::vector<ElementSet> members_of(const std::vector<SemigroupPrime>& qs) {
  std::vector<ElementSet> out;
  for (const auto& q : qs) out.push_back(q.members);
  return out;
}

RunOptions options(std::size_t cap, std::uint64_t seed, unsigned threads) {
  RunOptions o;
  o.bruteforce_cap = cap;
  o.seed = seed;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semigroup primes of finite commutative rings and their correspondence with X(Spec R)";

  // Leaked so no Python object outlives the interpreter in a static destructor.
  static auto* exceptions = new std::map<std::string, py::object>();
  const auto base = py::exception<Error>(m, "Error");
  (*exceptions)["Error"] = base;
  for (const char* name : {"InvalidParameter", "NotAHomomorphism", "NotAPartialOrder", "NotSpectral", "TooLarge",
                           "InvalidSemigroup", "InvariantViolation"}) {
    const auto cls = py::reinterpret_steal<py::object>(
        PyErr_NewException((std::string("specprime._core.") + name).c_str(), base.ptr(), nullptr));
    m.attr(name) = cls;
    (*exceptions)[name] = cls;
  }
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const auto it = exceptions->find(e.kind());
      PyErr_SetString((it == exceptions->end() ? exceptions->at("Error") : it->second).ptr(), e.what());
    }
  });

  m.attr("DEFAULT_SEED") = kDefaultSeed;
  m.attr("DEFAULT_BRUTEFORCE_CAP") = kDefaultBruteforceCap;

  m.def("all_checks", &all_checks);

  m.def(
      "run_check",
      [](const std::string& input, const std::string& check, std::size_t cap, std::uint64_t seed) {
        return run_check(parse(input), check, options(cap, seed, 1)).dump();
      },
      py::arg("input"), py::arg("check"), py::arg("bruteforce_cap") = kDefaultBruteforceCap,
      py::arg("seed") = kDefaultSeed);

  m.def(
      "run_job",
      [](const std::string& job_text, const std::string& output, bool write_files, std::size_t cap,
         std::uint64_t seed, unsigned threads) {
        JobSpec job = parse_job(parse(job_text));
        if (!output.empty()) job.output = output;
        RunOptions o = options(cap, seed, threads);
        o.write_files = write_files;
        RunResult r;
        {
          py::gil_scoped_release release;
          r = run_job(job, o);
        }
        Json out = {{"exit_code", r.exit_code},
                    {"reports", r.reports},
                    {"files", r.files},
                    {"errors", r.errors}};
        return out.dump();
      },
      py::arg("job"), py::arg("output") = "", py::arg("write_files") = false,
      py::arg("bruteforce_cap") = kDefaultBruteforceCap, py::arg("seed") = kDefaultSeed, py::arg("threads") = 0);

  m.def(
      "export_dot",
      [](const std::string& space, const std::string& input) { return export_dot(parse_dot_space(space), parse(input)); },
      py::arg("space"), py::arg("input"));

  m.def("default_job", [] { return default_job().dump(); });

  m.def(
      "element_names", [](const std::string& ring) { return parse_ring(parse(ring))->names(); }, py::arg("ring"));

  m.def(
      "spec",
      [](const std::string& ring) {
        std::vector<ElementSet> out;
        for (const auto& p : spec(parse_ring(parse(ring))).primes) out.push_back(p.members);
        return index_lists(out);
      },
      py::arg("ring"));

  m.def(
      "sprimes", [](const std::string& ring) { return index_lists(members_of(sprimes_from_spec(parse_ring(parse(ring))))); },
      py::arg("ring"));

  m.def(
      "sprimes_bruteforce",
      [](const std::string& ring, std::size_t cap) {
        auto r = parse_ring(parse(ring));
        return index_lists(members_of(sprimes_bruteforce(r->multiplicative(), cap)));
      },
      py::arg("ring"), py::arg("cap") = kDefaultBruteforceCap);

  m.def(
      "xspace", [](const std::string& poset) { return index_lists(xspace(parse_poset(parse(poset))).points); },
      py::arg("poset"));

  m.def(
      "surjectivity", [](const std::string& ring) { return to_json(surjectivity_report(analyze(parse_ring(parse(ring))))).dump(); },
      py::arg("ring"));

  m.def(
      "density",
      [](const std::string& ring) { return to_json(density_report(hull_kernel_space(parse_ring(parse(ring))))).dump(); },
      py::arg("ring"));

  m.def(
      "dedekind_verdict",
      [](unsigned free_rank, std::vector<unsigned> torsion) {
        return std::string(to_string(dedekind_verdict(ClassGroupProfile{free_rank, std::move(torsion)})));
      },
      py::arg("free_rank"), py::arg("torsion") = std::vector<unsigned>{});
}
