// Acceptance runner: one PASS/FAIL line per criterion.
//
//   pplp_acceptance            run all criteria
//   pplp_acceptance --only N   run criterion N; exit 0 on pass, 1 on fail,
//                              77 when it had to be skipped

#include "pplp/concurrent_store.hpp"
#include "pplp/covering.hpp"
#include "pplp/fixtures.hpp"
#include "pplp/fourier_motzkin.hpp"
#include "pplp/generator.hpp"
#include "pplp/parallel.hpp"
#include "pplp/projection.hpp"

#include <sched.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace pplp;

namespace {

enum class Status { pass, fail, skip };

struct Outcome {
  Status status;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

ConstraintList sorted(ConstraintList cs) {
  std::sort(cs.begin(), cs.end());
  return cs;
}

std::string canonical_text(const Polyhedron& p) { return format_poly(canonical_form(p)); }

Outcome golden_example1() {
  const auto t0 = Clock::now();
  const auto inst = example1();
  const auto c = vec({1, 1, 0, 0});
  const auto basis = Basis::from_basic({0, 1}, 4);
  std::vector<std::string> errors;

  const auto cert = certify(inst.lp, basis, c);
  if (!cert.certified || cert.x != vec({3, 3, 0, 0})) errors.push_back("optimum");
  if (reduced_costs(inst.lp, basis, c) != RationalVector{Rational(-1, 2), Rational(-1, 2)})
    errors.push_back("reduced costs");
  const auto lp = solve_lp(inst.lp, c);
  if (lp.status != LPStatus::optimal || lp.x != vec({3, 3, 0, 0})) errors.push_back("solve_lp");

  // Rows: constant, mu1, mu2; columns: constant, x3, x4.
  const auto t = exact_objective(inst.lp, basis, inst.pobj);
  const auto want = RationalMatrix::from_rows(
      {{0, 0, 0}, {3, Rational(-3, 8), Rational(-1, 8)}, {3, Rational(-1, 8), Rational(-3, 8)}});
  if (t.coeffs != want) errors.push_back("tableau");

  const auto sc = sign_conditions(t);
  const ConstraintList want_sc{make_constraint({-3, -1}, 0), make_constraint({-1, -3}, 0)};
  if (!std::holds_alternative<ConstraintList>(sc) || sorted(std::get<ConstraintList>(sc)) != sorted(want_sc))
    errors.push_back("sign conditions");

  const double secs = seconds_since(t0);
  if (secs >= 1.0) errors.push_back("runtime");
  std::ostringstream out;
  out << "X*=(3,3,0,0), alpha=(-1/2,-1/2), tableau and {3mu1+mu2>=0, mu1+3mu2>=0} exact, " << secs << " s";
  for (const auto& e : errors) out << "; mismatch: " << e;
  return {errors.empty() ? Status::pass : Status::fail, out.str()};
}

Outcome dual_degeneracy() {
  const auto inst = example1();
  const auto c = vec({-1, 0, 0, 0});
  const auto a = certify(inst.lp, Basis::from_nonbasic({0, 1}, 4), c);
  // The basis reaching (0,2,8,0) has x1 and x4 nonbasic.
  const auto b = certify(inst.lp, Basis::from_nonbasic({0, 3}, 4), c);
  const bool ok = a.certified && b.certified && a.x == vec({0, 0, 6, 6}) && b.x == vec({0, 2, 8, 0}) &&
                  dot(c, a.x) == 0 && dot(c, b.x) == 0;
  std::ostringstream out;
  out << "nonbasic {x1,x2}: " << (a.certified ? format_vector(a.x) : "not certified") << ", nonbasic {x1,x4}: "
      << (b.certified ? format_vector(b.x) : "not certified") << ", objective 0 at both";
  return {ok ? Status::pass : Status::fail, out.str()};
}

Outcome pyramid_degeneracy() {
  const std::size_t k = 8;
  const auto inst = pyramid(k);
  const auto apex = pyramid_apex(k);
  const auto c = inst.pobj.at(vec({0, 0, 1}));
  std::size_t candidates = 0, certified = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t d = b + 1; d < k; ++d) {
        ++candidates;
        const auto cert = certify(inst.lp, Basis::from_nonbasic({Index(3 + a), Index(3 + b), Index(3 + d)}, 3 + k), c);
        if (cert.certified && cert.x == apex) ++certified;
      }

  const auto sol = solve_parallel(inst.lp, inst.pobj, 4, Scheduler::dynamic_pool);
  std::set<std::vector<Index>> apex_bases;
  for (const auto& r : sol.regions)
    if (r.optimum == apex) apex_bases.insert(r.basis.nonbasic);
  CoveringOptions cov;
  cov.samples = 1000;
  const auto rep = verify_covering(inst.lp, inst.pobj, sol.regions, cov);

  std::ostringstream out;
  out << "apex certified under " << certified << "/" << candidates << " bases at mu=(0,0,1); solver: "
      << sol.regions.size() << " regions, " << apex_bases.size() << " with the apex; covering "
      << rep.covered << "/" << rep.samples << ", " << rep.disagreements << " disagreements";
  return {certified >= 3 && candidates == 56 && rep.passed() ? Status::pass : Status::fail, out.str()};
}

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  std::size_t matched = 0, total = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < 100; ++i) {
    InstanceSpec spec;
    spec.variables = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    spec.constraints = std::uniform_int_distribution<std::size_t>(spec.variables + 1, 12)(rng);
    spec.density = std::uniform_int_distribution<std::size_t>(std::min<std::size_t>(2, spec.variables),
                                                              spec.variables)(rng);
    spec.projected = 0;
    spec.seed = 1000 + i;
    const auto p = generate(spec).front();
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, p.dim - 1))(rng);
    std::vector<std::size_t> cols(p.dim);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<std::size_t> el(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(el.begin(), el.end());

    ++total;
    FmOptions fm;
    fm.cap = 1'000'000;
    if (canonical_text(project(p, el)) == canonical_text(fm_project(p, el, fm)))
      ++matched;
    else if (first_bad.empty())
      first_bad = "instance " + std::to_string(i) + " (" + spec.name() + ", seed " + std::to_string(spec.seed) + ")";
  }
  const double secs = seconds_since(t0);
  std::ostringstream out;
  out << matched << "/" << total << " canonical sets equal, " << secs << " s";
  if (!first_bad.empty()) out << "; first difference: " << first_bad;
  return {matched == total && secs < 300 ? Status::pass : Status::fail, out.str()};
}

Outcome covering_property() {
  std::size_t passed = 0, multiply = 0, samples = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < 50; ++i) {
    InstanceSpec spec;
    spec.constraints = 10 + i % 5;
    spec.variables = 4 + i % 3;
    spec.density = spec.variables - 1;
    spec.projected = 0;
    spec.seed = 5000 + i;
    const auto p = generate(spec).front();
    const std::vector<std::size_t> el{0, 1};
    ProjectOptions opts;
    opts.keep_solution = true;
    const auto res = project_detailed(p, el, opts);
    bool ok = false;
    if (res.encoding && res.solution) {
      const auto& enc = *res.encoding;
      CoveringOptions cov;
      cov.samples = 1000;
      cov.seed = 77 + i;
      for (std::size_t k : enc.kept) cov.center.push_back(enc.interior[k]);
      const auto rep = verify_covering(enc.lambda_lp, enc.pobj, res.solution->regions, cov);
      ok = rep.passed() && rep.coverage() == 1.0;
      multiply += rep.multiply_covered;
      samples += rep.samples;
    }
    if (ok)
      ++passed;
    else if (first_bad.empty())
      first_bad = spec.name() + " seed " + std::to_string(spec.seed);
  }
  std::ostringstream out;
  out << passed << "/50 instances fully covered with exact value agreement; " << multiply << " of " << samples
      << " samples multiply covered";
  if (!first_bad.empty()) out << "; first failure: " << first_bad;
  return {passed == 50 ? Status::pass : Status::fail, out.str()};
}

Outcome thread_determinism() {
  std::size_t identical = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < 20; ++i) {
    InstanceSpec spec;
    spec.constraints = 12;
    spec.variables = 6;
    spec.density = 5;
    spec.projected = 0;
    spec.seed = 7000 + i;
    const auto p = generate(spec).front();
    const std::vector<std::size_t> el{0, 2};
    std::set<std::string> outputs;
    for (auto sch : {Scheduler::fan_out_rounds, Scheduler::dynamic_pool})
      for (unsigned threads : {1u, 2u, 4u, 8u}) {
        ProjectOptions opts;
        opts.threads = threads;
        opts.scheduler = sch;
        outputs.insert(canonical_text(project(p, el, opts)));
      }
    if (outputs.size() == 1)
      ++identical;
    else if (first_bad.empty())
      first_bad = "seed " + std::to_string(spec.seed);
  }
  std::ostringstream out;
  out << identical << "/20 instances give one canonical set over threads {1,2,4,8} x {rounds,pool}";
  if (!first_bad.empty()) out << "; first difference: " << first_bad;
  return {identical == 20 ? Status::pass : Status::fail, out.str()};
}

Outcome concurrency_stress() {
  constexpr std::size_t kPushes = 100'000;
  constexpr unsigned kWriters = 8;
  constexpr unsigned kInserters = 64;
  std::size_t good_rounds = 0;
  for (int round = 0; round < 20; ++round) {
    PublishArray<std::size_t> store(kPushes);
    std::vector<std::vector<std::size_t>> got(kWriters);
    {
      std::vector<std::jthread> ws;
      for (unsigned w = 0; w < kWriters; ++w)
        ws.emplace_back([&, w] {
          for (std::size_t j = w; j < kPushes; j += kWriters) {
            const std::size_t i = store.push(std::make_unique<std::size_t>(j));
            got[w].push_back(i);
          }
        });
    }
    std::vector<char> seen(kPushes, 0);
    bool ok = store.ready() == kPushes && store.filled() == kPushes;
    for (unsigned w = 0; w < kWriters && ok; ++w)
      for (std::size_t i : got[w]) {
        if (i >= kPushes || seen[i] || store[i] % kWriters != w) {
          ok = false;
          break;
        }
        seen[i] = 1;
      }
    ok = ok && std::all_of(seen.begin(), seen.end(), [](char c) { return c == 1; });

    BasisTable table;
    const auto key = Basis::from_nonbasic({1, 4, 6}, 9);
    std::atomic<unsigned> falses{0};
    std::atomic<unsigned> arrived{0};
    {
      std::vector<std::jthread> ws;
      for (unsigned w = 0; w < kInserters; ++w)
        ws.emplace_back([&] {
          arrived.fetch_add(1);
          while (arrived.load() < kInserters) std::this_thread::yield();
          if (!table.test_and_insert(key)) falses.fetch_add(1);
        });
    }
    ok = ok && falses.load() == 1 && table.size() == 1;
    if (ok) ++good_rounds;
  }
  std::ostringstream out;
  out << good_rounds << "/20 rounds: 1e5 pushes from 8 workers gave indices 0..99999 with n_ready=100000, "
      << "64-way test_and_insert gave one false";
  return {good_rounds == 20 ? Status::pass : Status::fail, out.str()};
}

Outcome redundancy_modes() {
  std::size_t agree = 0, cleaned = 0, planted = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    InstanceSpec spec;
    spec.variables = 3 + i % 4;
    spec.constraints = 8 + i % 5;
    spec.redundant = 2 + i % 3;
    spec.density = spec.variables - (i % 2);
    spec.projected = 0;
    spec.seed = 9000 + i;
    const auto p = generate(spec).front();
    RedundancyOptions par;
    par.mode = RedundancyMode::parallel;
    par.threads = 4;
    const auto seq = minimize_constraints(p.constraints);
    const auto prl = minimize_constraints(p.constraints, par);
    if (!std::holds_alternative<IrredundantSystem>(seq) || !std::holds_alternative<IrredundantSystem>(prl)) continue;
    const auto& kept = std::get<IrredundantSystem>(seq).kept;
    if (sorted(kept) == sorted(std::get<IrredundantSystem>(prl).kept)) ++agree;
    bool all_gone = true;
    for (std::size_t r = spec.constraints - spec.redundant; r < spec.constraints; ++r) {
      ++planted;
      if (std::count(kept.begin(), kept.end(), p.constraints[r]) > 0) all_gone = false;
    }
    if (all_gone) ++cleaned;
  }
  std::ostringstream out;
  out << agree << "/200 identical kept sets (sequential vs parallel), " << cleaned << "/200 inputs with all "
      << "planted rows removed (" << planted << " planted rows)";
  return {agree == 200 && cleaned == 200 ? Status::pass : Status::fail, out.str()};
}

// Distinct (physical id, core id) pairs among the CPUs this process may use.
unsigned physical_cores() {
  cpu_set_t set;
  CPU_ZERO(&set);
  const bool have_mask = sched_getaffinity(0, sizeof(set), &set) == 0;
  std::ifstream in("/proc/cpuinfo");
  std::set<std::pair<int, int>> cores;
  int processor = -1, phys = 0;
  for (std::string line; std::getline(in, line);) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    const std::string key = line.substr(0, line.find_last_not_of(" \t", colon - 1) + 1);
    const int value = std::atoi(line.c_str() + colon + 1);
    if (key == "processor") processor = value;
    else if (key == "physical id") phys = value;
    else if (key == "core id" && (!have_mask || (processor >= 0 && CPU_ISSET(processor, &set))))
      cores.emplace(phys, value);
  }
  unsigned n = static_cast<unsigned>(cores.size());
  if (n == 0) n = std::thread::hardware_concurrency();
  if (have_mask) n = std::min(n, static_cast<unsigned>(CPU_COUNT(&set)));
  return n;
}

Outcome performance_smoke(bool force) {
  const unsigned cores = physical_cores();
  if (cores < 4 && !force)
    return {Status::skip, "host has " + std::to_string(cores) + " usable physical core(s), needs >= 4"};

  InstanceSpec spec;
  spec.constraints = 30;
  spec.variables = 8;
  spec.density = 8;
  spec.projected = 3;
  spec.seed = 1;
  const auto p = generate(spec).front();
  const std::vector<std::size_t> el{0, 1, 2};
  auto mean_time = [&](unsigned threads, std::size_t& regions) {
    double sum = 0;
    for (int rep = 0; rep < 10; ++rep) {
      ProjectOptions opts;
      opts.threads = threads;
      opts.scheduler = Scheduler::dynamic_pool;
      const auto t0 = Clock::now();
      const auto res = project_detailed(p, el, opts);
      sum += seconds_since(t0);
      regions = res.stats.regions;
    }
    return sum / 10;
  };
  std::size_t regions1 = 0, regions4 = 0;
  const double t1 = mean_time(1, regions1);
  const double t4 = mean_time(4, regions4);
  std::ostringstream out;
  out << spec.file_name(0) << " eliminating 3: " << regions1 << " regions, mean 1 thread " << t1 << " s, 4 threads "
      << t4 << " s, ratio " << t4 / t1 << " (" << cores << " physical cores)";
  return {regions1 >= 500 && t4 <= 0.6 * t1 ? Status::pass : Status::fail, out.str()};
}

Outcome duplicate_suppression() {
  const auto inst = pyramid(8);
  const auto rounds = solve_parallel(inst.lp, inst.pobj, 4, Scheduler::fan_out_rounds);
  const auto pool = solve_parallel(inst.lp, inst.pobj, 4, Scheduler::dynamic_pool);
  const auto& s = rounds.stats;
  std::ostringstream out;
  out << "pyramid k=8, rounds x4: " << s.aborted_duplicate << " aborted duplicates, " << s.regions << " regions, "
      << s.tasks << " tasks; pool x4: " << pool.stats.aborted_duplicate << " aborted, " << pool.stats.regions
      << " regions, " << pool.stats.tasks << " tasks";
  return {s.aborted_duplicate > 0 && s.regions < s.tasks ? Status::pass : Status::fail, out.str()};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool force = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (a == "--force-performance") {
      force = true;
    } else {
      std::cerr << "usage: " << argv[0] << " [--only N] [--force-performance]\n";
      return 2;
    }
  }
  if (only < 0 || only > 10) {
    std::cerr << "criterion must be 1..10\n";
    return 2;
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden example 1", golden_example1},
      {"dual degeneracy", dual_degeneracy},
      {"pyramid degeneracy", pyramid_degeneracy},
      {"oracle equivalence", oracle_equivalence},
      {"covering property", covering_property},
      {"thread determinism", thread_determinism},
      {"concurrency stress", concurrency_stress},
      {"redundancy modes", redundancy_modes},
      {"performance smoke", [force] { return performance_smoke(force); }},
      {"duplicate suppression", duplicate_suppression},
  };

  bool failed = false, skipped = false;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {Status::fail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Status::pass ? "PASS" : o.status == Status::fail ? "FAIL" : "SKIP";
    std::cout << "criterion " << i + 1 << " " << tag << " " << criteria[i].first << ": " << o.detail << std::endl;
    failed = failed || o.status == Status::fail;
    skipped = skipped || o.status == Status::skip;
  }
  if (failed) return 1;
  return only && skipped ? 77 : 0;
}
