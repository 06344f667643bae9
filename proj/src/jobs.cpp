#include "specprime/jobs.hpp"

#include "specprime/corpus.hpp"
#include "specprime/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <thread>

namespace specprime {

std::uint64_t seed_from_env() {
  const char* v = std::getenv("SPECPRIME_SEED");
  if (v == nullptr || *v == '\0') return kDefaultSeed;
  char* end = nullptr;
  errno = 0;
  const unsigned long long s = std::strtoull(v, &end, 10);
  if (errno != 0 || *end != '\0' || *v == '-')
    throw InvalidParameter(std::string("SPECPRIME_SEED is not an unsigned integer: ") + v);
  return s;
}

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> checks{"ideals",     "spec",         "sprimes",  "spectral",
                                               "xspace",     "retraction",   "surjectivity", "lattice",
                                               "avoidance",  "monotone",     "density",  "topology",
                                               "diagram",    "functor",      "dedekind", "ufd"};
  return checks;
}

std::vector<std::string> checks_for(InputKind kind) {
  switch (kind) {
    case InputKind::ring:
      return {"ideals",       "spec",    "sprimes",   "spectral", "xspace", "retraction",
              "surjectivity", "lattice", "avoidance", "monotone", "density"};
    case InputKind::poset: return {"spectral", "topology", "xspace"};
    case InputKind::hom: return {"diagram", "functor"};
    case InputKind::composable: return {"functor"};
    case InputKind::profile: return {"dedekind"};
    case InputKind::ufd: return {"ufd"};
  }
  return {};
}

JobSpec parse_job(const Json& j) {
  if (!j.is_object()) throw InvalidParameter("job must be a JSON object");
  JobSpec job;
  if (j.contains("inputs")) {
    if (!j["inputs"].is_array()) throw InvalidParameter("job.inputs must be an array");
    for (const auto& i : j["inputs"]) job.inputs.push_back(i);
  }
  std::vector<std::string> requested;
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) throw InvalidParameter("job.checks must be an array of names");
    for (const auto& c : j["checks"]) {
      if (!c.is_string()) throw InvalidParameter("job.checks entries must be strings");
      requested.push_back(c.get<std::string>());
    }
  }
  if (requested.empty()) requested.push_back("all");
  const auto& known = all_checks();
  for (const auto& c : requested) {
    if (c == "all") {
      job.checks = known;
      break;
    }
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw InvalidParameter("unknown check \"" + c + "\"");
    if (std::find(job.checks.begin(), job.checks.end(), c) == job.checks.end()) job.checks.push_back(c);
  }
  if (j.contains("output")) {
    if (!j["output"].is_string()) throw InvalidParameter("job.output must be a path string");
    job.output = j["output"].get<std::string>();
  }
  if (j.contains("formats")) {
    if (!j["formats"].is_array()) throw InvalidParameter("job.formats must be an array");
    job.emit_json = false;
    for (const auto& f : j["formats"]) {
      const std::string name = f.is_string() ? f.get<std::string>() : f.dump();
      if (name == "json")
        job.emit_json = true;
      else if (name == "dot")
        job.emit_dot = true;
      else
        throw InvalidParameter("unknown format \"" + name + "\"");
    }
  }
  return job;
}

namespace {

struct Parsed {
  InputKind kind = InputKind::ring;
  std::string label;
  RingPtr ring;
  std::optional<FinitePoset> poset;
  std::optional<RingHom> hom;
  std::optional<ComposablePair> pair;
  ClassGroupProfile profile;
  std::size_t ufd_n = 0;
  Json expect = Json::object();  // check name -> {result field: expected value}
};

Parsed parse_input(const Json& j, const RunOptions& opt) {
  Parsed p;
  p.kind = classify_input(j);
  if (j.contains("expect")) {
    p.expect = j["expect"];
    if (!p.expect.is_object()) throw InvalidParameter("\"expect\" must map check names to objects");
    const auto applicable = checks_for(p.kind);
    for (const auto& [name, fields] : p.expect.items()) {
      if (std::find(applicable.begin(), applicable.end(), name) == applicable.end())
        throw InvalidParameter("\"expect\" names check \"" + name + "\" which does not apply to this input");
      if (!fields.is_object()) throw InvalidParameter("\"expect\"." + name + " must be an object");
    }
  }
  switch (p.kind) {
    case InputKind::ring:
      p.ring = parse_ring(j, opt.ring_size_cap);
      p.label = p.ring->label();
      break;
    case InputKind::poset:
      p.poset = parse_poset(j);
      p.label = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                             : "poset(" + std::to_string(p.poset->size()) + ")";
      break;
    case InputKind::hom:
      p.hom = parse_hom(j, opt.ring_size_cap);
      p.label = p.hom->source()->label() + " -> " + p.hom->target()->label();
      break;
    case InputKind::composable:
      p.pair = parse_composable(j, opt.ring_size_cap);
      p.label = p.pair->first.source()->label() + " -> " + p.pair->first.target()->label() + " -> " +
                p.pair->second.target()->label();
      break;
    case InputKind::profile:
      p.profile = parse_profile(j);
      p.label = "Cl = " + p.profile.describe();
      break;
    case InputKind::ufd:
      p.ufd_n = parse_ufd(j);
      p.label = "UFD with " + std::to_string(p.ufd_n) + " primes";
      break;
  }
  return p;
}

struct Outcome {
  Json result = Json::object();
  bool ok = true;
};

// Lazily built analyses, one context per input.
class Context {
 public:
  Context(const Parsed& p, const RunOptions& o) : parsed(p), options(o) {}

  const RingAnalysis& analysis(const RingPtr& r) {
    auto it = cache_.find(r.get());
    if (it == cache_.end()) it = cache_.emplace(r.get(), analyze(r)).first;
    return it->second;
  }
  const RingAnalysis& analysis() { return analysis(parsed.ring); }

  const Parsed& parsed;
  const RunOptions& options;

 private:
  std::map<const FiniteRing*, RingAnalysis> cache_;
};

Json set_list(const std::vector<Ideal>& v) {
  Json out = Json::array();
  for (const auto& i : v) out.push_back(to_json(i.members));
  return out;
}

Json set_list(const std::vector<SemigroupPrime>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q.members));
  return out;
}

Json set_list(const std::vector<ElementSet>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

bool is_field(const FiniteRing& r) { return r.units().count() + 1 == r.size(); }

// Calls fn(indices) for every subset of {0..n-1} with 1..max_size members.
void for_small_subsets(std::size_t n, std::size_t max_size, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!cur.empty()) fn(cur);
    if (cur.size() == max_size) return;
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// --- ring checks -------------------------------------------------------------

Outcome check_ideals(Context& c) {
  const auto& a = c.analysis();
  const auto& sp = a.spectrum();
  Outcome o;
  std::size_t radical_count = 0;
  bool agree = true;
  for (const auto& i : a.ideals) {
    const Ideal r = radical(i);
    if (r.members == i.members) ++radical_count;
    agree = agree && r == prime_hull_intersection(i, sp.primes);
  }
  o.result = Json{{"ring", a.ring->label()},
                  {"size", a.ring->size()},
                  {"unit_count", a.ring->units().count()},
                  {"ideal_count", a.ideals.size()},
                  {"radical_ideal_count", radical_count},
                  {"radicals_agree", agree},
                  {"ideals", set_list(a.ideals)}};
  o.ok = agree;
  return o;
}

Outcome check_spec(Context& c) {
  const auto& a = c.analysis();
  const auto& sp = a.spectrum();
  Json names = Json::array();
  for (const auto& p : sp.primes) names.push_back(format_set(p.members, a.ring->names()));
  Outcome o;
  const bool antichain = sp.order.is_antichain();
  o.result = Json{{"ring", a.ring->label()},
                  {"prime_count", sp.size()},
                  {"primes", set_list(sp.primes)},
                  {"prime_names", names},
                  {"antichain", antichain}};
  o.ok = antichain;
  return o;
}

Outcome check_sprimes(Context& c) {
  const auto& a = c.analysis();
  const auto& s = a.sprimes;
  Outcome o;
  bool all_valid = true;
  for (const auto& q : s.primes) all_valid = all_valid && ring_semigroup_prime_violation(*a.ring, q.members).empty();
  Json brute{{"cap", c.options.bruteforce_cap}, {"ran", false}};
  bool agrees = true;
  if (a.ring->size() <= c.options.bruteforce_cap) {
    const auto bf = sprimes_bruteforce(a.ring->multiplicative(), c.options.bruteforce_cap);
    agrees = bf == s.primes;
    brute["ran"] = true;
    brute["count"] = bf.size();
    brute["agrees"] = agrees;
  }
  o.result = Json{{"ring", a.ring->label()},
                  {"size", a.ring->size()},
                  {"spec_count", s.spectrum.size()},
                  {"sprime_count", s.size()},
                  {"sprimes", set_list(s.primes)},
                  {"spec_embedding", s.spec_embedding},
                  {"order_covers", covers_json(s.order)},
                  {"all_valid", all_valid},
                  {"bruteforce", brute}};
  o.ok = all_valid && agrees;
  return o;
}

Outcome check_ring_spectral(Context& c) {
  const auto& a = c.analysis();
  const auto s = verify_spectral(a.sprimes.presentation);
  const auto x = verify_spectral(a.xspace.presentation);
  const bool s_order = a.sprimes.presentation.specialization_order() == a.sprimes.order;
  const bool x_order = a.xspace.presentation.specialization_order() == a.xspace.order;
  Outcome o;
  o.result = Json{{"ring", a.ring->label()},
                  {"sprimes", to_json(s)},
                  {"xspace", to_json(x)},
                  {"sprimes_order_is_inclusion", s_order},
                  {"xspace_order_is_inclusion", x_order}};
  o.ok = s.passed() && x.passed() && s_order && x_order;
  return o;
}

Outcome check_ring_xspace(Context& c) {
  const auto& a = c.analysis();
  const auto& order = a.spectrum().order;
  const std::size_t expected = enumerate_down_sets(order).size() - 1;
  const std::size_t power = (std::size_t{1} << order.size()) - 1;
  Outcome o;
  o.result = Json{{"ring", a.ring->label()},
                  {"xspace_count", a.xspace.points.size()},
                  {"nonempty_down_sets", expected},
                  {"points", set_list(a.xspace.points)},
                  {"order_covers", covers_json(a.xspace.order)}};
  o.ok = a.xspace.points.size() == expected && (!order.is_antichain() || expected == power);
  return o;
}

Outcome check_retraction_all(Context& c) {
  const auto& a = c.analysis();
  const auto& sp = a.spectrum();
  check_retraction(a);
  std::size_t equal_to_y = 0;
  for (const auto& y : a.xspace.points)
    if (jp_closure(a, DownSet{y}).members == y) ++equal_to_y;
  bool j_i_phi = true;
  for (std::size_t p = 0; p < sp.size(); ++p)
    j_i_phi = j_i_phi && j_map(a, SemigroupPrime{a.ring->multiplicative(), sp.primes[p].members}) == phi(sp.order, p);
  Outcome o;
  o.result = Json{{"ring", a.ring->label()},
                  {"p_after_j_identity", true},
                  {"jp_closure_checked", a.xspace.points.size()},
                  {"jp_closure_equals_y", equal_to_y},
                  {"j_after_i_is_phi", j_i_phi}};
  o.ok = j_i_phi && equal_to_y == a.xspace.points.size();
  return o;
}

Outcome check_surjectivity(Context& c) {
  const auto rep = surjectivity_report(c.analysis());
  Outcome o;
  o.result = to_json(rep);
  const bool all_true = rep.j_surjective && rep.radical_principal && rep.union_avoidance && rep.basis_condition &&
                        rep.prime_radical_principal && rep.compactly_packed_ideal && rep.compactly_packed_prime;
  o.ok = rep.consistent() && all_true;
  return o;
}

Outcome check_lattice(Context& c) {
  const auto& a = c.analysis();
  const auto& s = a.sprimes;
  std::size_t families = 0, no_infimum = 0, mismatches = 0, bad_sups = 0;
  Json first_mismatch = nullptr;
  for_small_subsets(s.size(), 3, [&](const std::vector<std::size_t>& idx) {
    std::vector<SemigroupPrime> t;
    for (auto k : idx) t.push_back(s.primes[k]);
    ++families;
    if (s.index_of(sup_sprimes(t).members) == Spectrum::npos) ++bad_sups;
    const auto inf = inf_sprimes(s, t);
    const auto glb = glb_exhaustive(s, t);
    if (inf.no_infimum()) ++no_infimum;
    const bool agree = inf.no_infimum() ? !glb.has_value()
                                        : glb.has_value() && s.index_of(inf.infimum->members) == *glb;
    if (!agree) {
      ++mismatches;
      if (first_mismatch.is_null()) first_mismatch = idx;
    }
  });
  Outcome o;
  o.result = Json{{"ring", a.ring->label()},     {"sprime_count", s.size()},
                  {"families", families},         {"sup_outside_sprimes", bad_sups},
                  {"no_infimum", no_infimum},     {"inf_glb_mismatches", mismatches},
                  {"first_mismatch", first_mismatch}};
  o.ok = bad_sups == 0 && mismatches == 0;
  return o;
}

Outcome check_avoidance(Context& c) {
  const auto& a = c.analysis();
  const auto& sp = a.spectrum();
  std::size_t tuples = 0, failures = 0;
  Json witness = nullptr;
  for_small_subsets(sp.size(), 3, [&](const std::vector<std::size_t>& idx) {
    std::vector<Ideal> primes;
    for (auto k : idx) primes.push_back(sp.primes[k]);
    ++tuples;
    const auto rep = prime_avoidance_j(a, primes);
    if (!rep.holds()) {
      ++failures;
      if (witness.is_null()) witness = Json{{"primes", idx}, {"lhs", to_json(rep.lhs)}, {"rhs", to_json(rep.rhs)}};
    }
  });
  Outcome o;
  o.result = Json{{"ring", a.ring->label()}, {"tuples", tuples}, {"failures", failures}, {"witness", witness}};
  o.ok = failures == 0;
  return o;
}

inline constexpr std::size_t kExhaustiveMonotonePairs = 4096;
inline constexpr std::size_t kRandomMonotonePairs = 512;

Outcome check_monotone(Context& c) {
  const auto& a = c.analysis();
  const std::size_t k = a.spectrum().size();
  const std::size_t subsets = (std::size_t{1} << k) - 1;
  std::vector<std::pair<ElementSet, ElementSet>> pairs;
  const bool exhaustive = subsets * subsets <= kExhaustiveMonotonePairs;
  if (exhaustive) {
    for (std::size_t m1 = 1; m1 <= subsets; ++m1)
      for (std::size_t m2 = 1; m2 <= subsets; ++m2) pairs.emplace_back(ElementSet(k, m1), ElementSet(k, m2));
  } else {
    pairs = random_subset_pairs(k, kRandomMonotonePairs, c.options.seed);
  }
  std::size_t violations = 0;
  Json witness = nullptr;
  for (const auto& [y1, y2] : pairs) {
    if (!monotone_p_check(a, y1, y2).holds()) {
      ++violations;
      if (witness.is_null()) witness = Json::array({to_json(y1), to_json(y2)});
    }
  }
  Outcome o;
  o.result = Json{{"ring", a.ring->label()},
                  {"mode", exhaustive ? "exhaustive" : "random"},
                  {"pairs", pairs.size()},
                  {"violations", violations},
                  {"witness", witness}};
  if (!exhaustive) o.result["seed"] = c.options.seed;
  o.ok = violations == 0;
  return o;
}

Outcome check_density(Context& c) {
  const auto& a = c.analysis();
  const auto rep = density_report(a.sprimes);
  Outcome o;
  o.result = to_json(rep);
  o.result["ring"] = a.ring->label();
  o.result["is_field"] = is_field(*a.ring);
  o.ok = rep.dense && (!is_field(*a.ring) || rep.very_dense);
  return o;
}

// --- poset checks ---------------------------------------------------------------

Outcome check_poset_spectral(Context& c) {
  const auto& x = *c.parsed.poset;
  const auto alex = alexandrov_presentation(x);
  const auto xs = xspace(x);
  const auto ra = verify_spectral(alex);
  const auto rx = verify_spectral(xs.presentation);
  const bool order = alex.specialization_order() == x;
  Outcome o;
  o.result = Json{{"poset", c.parsed.label},
                  {"alexandrov", to_json(ra)},
                  {"xspace", to_json(rx)},
                  {"alexandrov_order_matches", order}};
  o.ok = ra.passed() && rx.passed() && order;
  return o;
}

inline constexpr std::size_t kFullSubsetMaxPoints = 12;
inline constexpr std::size_t kRandomTopologySubsets = 1000;

Outcome check_topology(Context& c) {
  const auto& x = *c.parsed.poset;
  const std::size_t n = x.size();
  std::vector<ElementSet> subsets;
  const bool exhaustive = n <= kFullSubsetMaxPoints;
  if (exhaustive) {
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) subsets.emplace_back(n, m);
  } else {
    std::mt19937_64 gen(c.options.seed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t k = 0; k < kRandomTopologySubsets; ++k) {
      ElementSet y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = coin(gen);
      subsets.push_back(std::move(y));
    }
  }
  std::size_t failures = 0;
  Json witness = nullptr;
  for (const auto& y : subsets) {
    const bool ok = closure(x, y, ClosureMode::inverse) == x.down_closure(y) &&
                    closure(x, y, ClosureMode::constructible) == y &&
                    closure(x, y, ClosureMode::specialization) == x.up_closure(y) &&
                    closure(x, y, ClosureMode::generization) == x.down_closure(y);
    if (!ok) {
      ++failures;
      if (witness.is_null()) witness = to_json(y);
    }
  }
  Outcome o;
  o.result = Json{{"poset", c.parsed.label},
                  {"points", n},
                  {"mode", exhaustive ? "exhaustive" : "random"},
                  {"subsets", subsets.size()},
                  {"failures", failures},
                  {"witness", witness}};
  if (!exhaustive) o.result["seed"] = c.options.seed;
  o.ok = failures == 0;
  return o;
}

Outcome check_poset_xspace(Context& c) {
  const auto& x = *c.parsed.poset;
  const auto xs = xspace(x);
  check_phi_embedding(x, xs);
  const std::size_t expected = enumerate_down_sets(x).size() - 1;
  Outcome o;
  o.result = Json{{"poset", c.parsed.label},
                  {"xspace_count", xs.points.size()},
                  {"nonempty_down_sets", expected},
                  {"phi_embedding", true}};
  o.ok = xs.points.size() == expected;
  if (x.is_antichain() && x.size() < 63) o.ok = o.ok && expected == (std::size_t{1} << x.size()) - 1;
  return o;
}

// --- hom checks -------------------------------------------------------------------

Outcome check_diagram(Context& c) {
  const auto& f = *c.parsed.hom;
  const auto rep = diagram_check(f, c.analysis(f.source()), c.analysis(f.target()));
  Outcome o;
  o.result = to_json(rep);
  o.result["hom"] = c.parsed.label;
  o.ok = rep.commutes() && rep.transfer_holds();
  return o;
}

bool is_identity(const std::vector<std::size_t>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != i) return false;
  return true;
}

bool identity_laws(Context& c, const RingPtr& r) {
  const auto& a = c.analysis(r);
  const auto id = RingHom::identity(r);
  const auto fa = spec_map(id, a.spectrum(), a.spectrum());
  bool ok = is_identity(fa) && is_identity(s_map(id, a.sprimes, a.sprimes));
  const XFunctor xf(a.spectrum().order, a.spectrum().order, fa);
  for (const auto& y : enumerate_down_sets(a.spectrum().order)) ok = ok && xf.apply(y) == y;
  return ok;
}

Outcome check_hom_functor(Context& c) {
  const auto& f = *c.parsed.hom;
  const auto& src = c.analysis(f.source());
  const auto& tgt = c.analysis(f.target());
  const auto sf = s_map(f, src.sprimes, tgt.sprimes);
  const bool ids = identity_laws(c, f.source()) && identity_laws(c, f.target());
  Outcome o;
  o.result = Json{{"hom", c.parsed.label}, {"identity_laws", ids}, {"s_map", sf}};
  o.ok = ids;
  return o;
}

Outcome check_composable_functor(Context& c) {
  const auto& [f, g] = *c.parsed.pair;
  const auto h = compose(g, f);
  const auto& A = c.analysis(f.source());
  const auto& B = c.analysis(f.target());
  const auto& C = c.analysis(g.target());

  const auto sf = s_map(f, A.sprimes, B.sprimes);
  const auto sg = s_map(g, B.sprimes, C.sprimes);
  const auto sh = s_map(h, A.sprimes, C.sprimes);
  bool s_law = true;
  for (std::size_t k = 0; k < sh.size(); ++k) s_law = s_law && sh[k] == sf[sg[k]];

  const auto fa = spec_map(f, A.spectrum(), B.spectrum());
  const auto ga = spec_map(g, B.spectrum(), C.spectrum());
  const auto ha = spec_map(h, A.spectrum(), C.spectrum());
  bool spec_law = true;
  for (std::size_t p = 0; p < ha.size(); ++p) spec_law = spec_law && ha[p] == fa[ga[p]];

  const XFunctor xf(B.spectrum().order, A.spectrum().order, fa);
  const XFunctor xg(C.spectrum().order, B.spectrum().order, ga);
  const XFunctor xh(C.spectrum().order, A.spectrum().order, ha);
  bool x_law = true;
  for (const auto& y : enumerate_down_sets(C.spectrum().order)) x_law = x_law && xh.apply(y) == xf.apply(xg.apply(y));

  const auto diagram = diagram_check(h, A, C);
  Outcome o;
  o.result = Json{{"pair", c.parsed.label},
                  {"s_composition", s_law},
                  {"spec_composition", spec_law},
                  {"x_composition", x_law},
                  {"composite_diagram", to_json(diagram)}};
  o.ok = s_law && spec_law && x_law && diagram.commutes() && diagram.transfer_holds();
  return o;
}

// --- symbolic checks ------------------------------------------------------------

Outcome check_dedekind(Context& c) {
  const auto& p = c.parsed.profile;
  const auto v = dedekind_verdict(p);
  Outcome o;
  o.result = Json{{"class_group", p.describe()},
                  {"free_rank", p.free_rank},
                  {"torsion", p.torsion_invariants},
                  {"is_torsion", p.is_torsion()},
                  {"verdict", to_string(v)}};
  o.ok = (v == DedekindVerdict::Homeomorphism) == (p.free_rank == 0);
  return o;
}

inline constexpr std::size_t kExactUfdOpenCheckMax = 6;

Outcome check_ufd(Context& c) {
  const std::size_t n = c.parsed.ufd_n;
  const auto rep = check_ufd_model(ufd_model(n), n <= kExactUfdOpenCheckMax);
  Outcome o;
  o.result = to_json(rep);
  o.result["exact_open_check"] = n <= kExactUfdOpenCheckMax;
  o.ok = rep.sprime_count == (std::size_t{1} << n) && rep.bijective && rep.order_is_inclusion && rep.homeomorphic &&
         rep.spectral && rep.minimum_is_zero_ideal;
  return o;
}

using CheckFn = Outcome (*)(Context&);

CheckFn lookup_check(InputKind kind, const std::string& name) {
  static const std::map<std::pair<InputKind, std::string>, CheckFn> table{
      {{InputKind::ring, "ideals"}, &check_ideals},
      {{InputKind::ring, "spec"}, &check_spec},
      {{InputKind::ring, "sprimes"}, &check_sprimes},
      {{InputKind::ring, "spectral"}, &check_ring_spectral},
      {{InputKind::ring, "xspace"}, &check_ring_xspace},
      {{InputKind::ring, "retraction"}, &check_retraction_all},
      {{InputKind::ring, "surjectivity"}, &check_surjectivity},
      {{InputKind::ring, "lattice"}, &check_lattice},
      {{InputKind::ring, "avoidance"}, &check_avoidance},
      {{InputKind::ring, "monotone"}, &check_monotone},
      {{InputKind::ring, "density"}, &check_density},
      {{InputKind::poset, "spectral"}, &check_poset_spectral},
      {{InputKind::poset, "topology"}, &check_topology},
      {{InputKind::poset, "xspace"}, &check_poset_xspace},
      {{InputKind::hom, "diagram"}, &check_diagram},
      {{InputKind::hom, "functor"}, &check_hom_functor},
      {{InputKind::composable, "functor"}, &check_composable_functor},
      {{InputKind::profile, "dedekind"}, &check_dedekind},
      {{InputKind::ufd, "ufd"}, &check_ufd},
  };
  auto it = table.find({kind, name});
  return it == table.end() ? nullptr : it->second;
}

enum class Status { ok, assertion, input_error };

struct CheckRecord {
  std::string check;
  Json envelope;
  Status status = Status::ok;
};

CheckRecord run_one(Context& ctx, std::size_t index, const std::string& name, CheckFn fn) {
  CheckRecord rec;
  rec.check = name;
  Json env{{"input", index}, {"kind", to_string(ctx.parsed.kind)}, {"label", ctx.parsed.label}, {"check", name}};
  try {
    Outcome out = fn(ctx);
    if (auto it = ctx.parsed.expect.find(name); it != ctx.parsed.expect.end()) {
      Json mismatches = Json::object();
      for (const auto& [field, want] : it->items()) {
        const Json got = out.result.contains(field) ? out.result[field] : Json();
        if (got != want) mismatches[field] = {{"expected", want}, {"actual", got}};
      }
      if (!mismatches.empty()) {
        env["expect_mismatches"] = std::move(mismatches);
        out.ok = false;
      }
    }
    env["ok"] = out.ok;
    env["result"] = std::move(out.result);
    rec.status = out.ok ? Status::ok : Status::assertion;
  } catch (const InvariantViolation& e) {
    env["ok"] = false;
    env["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    rec.status = Status::assertion;
  } catch (const Error& e) {
    env["ok"] = false;
    env["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    rec.status = Status::input_error;
  }
  rec.envelope = std::move(env);
  return rec;
}

struct InputRecord {
  std::optional<std::string> parse_error;
  std::string label;
  InputKind kind = InputKind::ring;
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, std::string>> dots;  // space name, text
};

std::string slug(const std::string& label) {
  std::string out;
  for (char ch : label) {
    const bool keep = std::isalnum(static_cast<unsigned char>(ch)) != 0;
    if (keep)
      out += ch;
    else if (!out.empty() && out.back() != '_')
      out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  if (out.size() > 48) out.resize(48);
  return out.empty() ? "input" : out;
}

std::string set_label(const ElementSet& s, const std::vector<std::string>& names) { return format_set(s, names); }

std::vector<std::string> prime_labels(const Spectrum& sp, const FiniteRing& r) {
  std::vector<std::string> out;
  for (const auto& p : sp.primes) out.push_back(set_label(p.members, r.names()));
  return out;
}

std::vector<std::string> xspace_labels(const XSpace& xs, const std::vector<std::string>& base) {
  std::vector<std::string> out;
  for (const auto& y : xs.points) {
    std::string s = "{";
    for_each_member(y, [&](std::size_t i) { s += (s.size() > 1 ? "," : "") + base[i]; });
    out.push_back(s + "}");
  }
  return out;
}

std::string dot_for(DotSpace space, const Parsed& p) {
  if (p.kind == InputKind::ring) {
    const auto sp = spec(p.ring);
    const auto labels = prime_labels(sp, *p.ring);
    switch (space) {
      case DotSpace::spec: return to_dot(sp.order, "Spec " + p.label, labels);
      case DotSpace::sprimes: {
        const auto s = hull_kernel_space(p.ring, sp);
        std::vector<std::string> ql;
        for (const auto& q : s.primes) ql.push_back(set_label(q.members, p.ring->names()));
        return to_dot(s.order, "S " + p.label, ql);
      }
      case DotSpace::xspace: {
        const auto xs = xspace(sp.order);
        return to_dot(xs.order, "X " + p.label, xspace_labels(xs, labels));
      }
    }
  }
  if (p.kind == InputKind::poset) {
    const auto& x = *p.poset;
    switch (space) {
      case DotSpace::spec: return to_dot(x, p.label, x.names());
      case DotSpace::xspace: {
        const auto xs = xspace(x);
        return to_dot(xs.order, "X " + p.label, xspace_labels(xs, x.names()));
      }
      case DotSpace::sprimes: break;
    }
  }
  throw InvalidParameter("no " + std::string(space == DotSpace::spec      ? "spec"
                                             : space == DotSpace::sprimes ? "sprimes"
                                                                          : "xspace") +
                         " diagram for a " + to_string(p.kind) + " input");
}

InputRecord process(const Json& spec, std::size_t index, const JobSpec& job, const RunOptions& options) {
  InputRecord rec;
  Parsed parsed;
  try {
    parsed = parse_input(spec, options);
  } catch (const Error& e) {
    rec.parse_error = "input " + std::to_string(index) + ": " + e.kind() + ": " + e.what();
    return rec;
  }
  rec.label = parsed.label;
  rec.kind = parsed.kind;
  Context ctx(parsed, options);
  for (const auto& name : job.checks)
    if (CheckFn fn = lookup_check(parsed.kind, name)) rec.checks.push_back(run_one(ctx, index, name, fn));
  if (job.emit_dot) {
    std::vector<std::pair<std::string, DotSpace>> spaces;
    if (parsed.kind == InputKind::ring)
      spaces = {{"spec", DotSpace::spec}, {"sprimes", DotSpace::sprimes}, {"xspace", DotSpace::xspace}};
    else if (parsed.kind == InputKind::poset)
      spaces = {{"poset", DotSpace::spec}, {"xspace", DotSpace::xspace}};
    for (const auto& [name, space] : spaces) {
      try {
        rec.dots.emplace_back(name, dot_for(space, parsed));
      } catch (const Error&) {
        // The matching check already records the failure.
      }
    }
  }
  return rec;
}

void write_text(const std::filesystem::path& path, const std::string& text, RunResult& result) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write " + path.string());
  out << text;
  result.files.push_back(path.string());
}

}  // namespace

RunResult run_job(const JobSpec& job, const RunOptions& options) {
  RunResult result;
  if (job.inputs.empty()) return result;

  std::vector<InputRecord> records(job.inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < job.inputs.size(); i = next++) records[i] = process(job.inputs[i], i, job, options);
  };
  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, job.inputs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : records)
    if (r.parse_error) result.errors.push_back(*r.parse_error);
  if (!result.errors.empty()) {
    result.exit_code = kExitInputError;
    return result;
  }

  bool input_error = false, assertion = false;
  for (const auto& r : records)
    for (const auto& c : r.checks) {
      result.reports.push_back(c.envelope);
      input_error = input_error || c.status == Status::input_error;
      assertion = assertion || c.status == Status::assertion;
      if (c.status != Status::ok)
        result.errors.push_back(r.label + " [" + c.check + "]: " +
                                (c.envelope.contains("error") ? c.envelope["error"]["message"].get<std::string>()
                                                              : std::string("check reported a failure")));
    }
  result.exit_code = input_error ? kExitInputError : assertion ? kExitAssertionFailure : kExitOk;

  if (!options.write_files) return result;
  namespace fs = std::filesystem;
  const fs::path dir(job.output);
  fs::create_directories(dir);
  std::string stream;
  for (std::size_t i = 0; i < records.size(); ++i) {
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "%04zu", i);
    const std::string stem = std::string(prefix) + "-" + slug(records[i].label);
    for (const auto& c : records[i].checks) {
      stream += c.envelope.dump() + "\n";
      if (job.emit_json) write_text(dir / (stem + "-" + c.check + ".json"), c.envelope.dump(2) + "\n", result);
      if (c.status != Status::ok)
        write_text(dir / (stem + "-" + c.check + ".witness.json"),
                   Json{{"input", job.inputs[i]}, {"report", c.envelope}}.dump(2) + "\n", result);
    }
    for (const auto& [name, text] : records[i].dots) write_text(dir / (stem + "-" + name + ".dot"), text, result);
  }
  write_text(dir / "reports.jsonl", stream, result);
  return result;
}

Json run_check(const Json& input, const std::string& check, const RunOptions& options) {
  const Parsed parsed = parse_input(input, options);
  CheckFn fn = lookup_check(parsed.kind, check);
  if (fn == nullptr)
    throw InvalidParameter("check \"" + check + "\" does not apply to a " + to_string(parsed.kind) + " input");
  Context ctx(parsed, options);
  return run_one(ctx, 0, check, fn).envelope;
}

DotSpace parse_dot_space(const std::string& name) {
  if (name == "spec") return DotSpace::spec;
  if (name == "sprimes") return DotSpace::sprimes;
  if (name == "xspace") return DotSpace::xspace;
  throw InvalidParameter("unknown space \"" + name + "\" (expected spec, sprimes or xspace)");
}

std::string export_dot(DotSpace space, const Json& input, std::size_t ring_size_cap) {
  RunOptions options;
  options.ring_size_cap = ring_size_cap;
  return dot_for(space, parse_input(input, options));
}

}  // namespace specprime
