// pplp: generate, project, hull, verify, bench and graph polyhedra.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 internal hard error (e.g. an infeasible or unbounded parametric LP).

#include "bench.hpp"

#include "pplp/covering.hpp"
#include "pplp/fixtures.hpp"
#include "pplp/fourier_motzkin.hpp"
#include "pplp/generator.hpp"
#include "pplp/projection.hpp"
#include "pplp/solution_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace pplp;
using namespace pplp::cli;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Elimination {
  std::string list;
  std::optional<std::size_t> count;

  std::vector<std::size_t> resolve(std::size_t dim) const {
    std::vector<std::size_t> out;
    if (count) {
      if (*count > dim) throw InputError("--project-count exceeds the dimension");
      for (std::size_t j = 0; j < *count; ++j) out.push_back(j);
      return out;
    }
    std::stringstream ss(list);
    for (std::string tok; std::getline(ss, tok, ',');) {
      if (tok.empty()) continue;
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size()) throw InputError("bad variable index '" + tok + "'");
      if (v >= dim) throw InputError("variable index " + tok + " out of range for dimension " + std::to_string(dim));
      out.push_back(v);
    }
    return out;
  }
};

void add_elimination(CLI::App* cmd, Elimination& e) {
  auto* el = cmd->add_option("--eliminate", e.list, "Comma-separated 0-based indices of variables to eliminate");
  auto* pc = cmd->add_option("--project-count", e.count, "Eliminate the first n variables");
  el->excludes(pc);
}

Polyhedron load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return parse_poly(in);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Scheduler parse_scheduler(const std::string& s) {
  if (s == "rounds") return Scheduler::fan_out_rounds;
  if (s == "pool") return Scheduler::dynamic_pool;
  throw InputError("unknown scheduler '" + s + "'");
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

PlpInstance load_fixture(const std::string& name) {
  if (name == "example1") return example1();
  if (name.rfind("pyramid", 0) == 0) {
    std::size_t k = 8;
    if (name.size() > 8 && name[7] == ':') k = std::stoul(name.substr(8));
    return pyramid(k);
  }
  throw InputError("unknown fixture '" + name + "' (example1, pyramid[:k])");
}

struct SolveFlags {
  unsigned threads = 1;
  std::string scheduler = "pool";

  ProjectOptions project_options() const {
    ProjectOptions o;
    o.threads = threads;
    o.scheduler = parse_scheduler(scheduler);
    return o;
  }
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
  cmd->add_option("--threads", f.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--scheduler", f.scheduler, "rounds or pool")->check(CLI::IsMember({"rounds", "pool"}));
}

void print_report(const std::string& label, const CoveringReport& rep) {
  std::cout << label << ": covered " << rep.covered << "/" << rep.samples << ", overlap rate " << rep.overlap_rate()
            << ", disagreements " << rep.disagreements << ", uncertified " << rep.uncertified << '\n';
  for (const auto& c : rep.counterexamples) std::cout << "  " << c << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametric LP based polyhedra projection"};
  app.require_subcommand(1);

  // gen
  InstanceSpec spec;
  std::string gen_out = ".";
  auto* gen = app.add_subcommand("gen", "Generate random polyhedra");
  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("-m,--constraints", spec.constraints, "Constraints per polyhedron");
    cmd->add_option("-r,--redundant", spec.redundant, "Planted redundant constraints");
    cmd->add_option("-d,--variables", spec.variables, "Variables");
    cmd->add_option("--density", spec.density, "Nonzero coefficients per row");
    cmd->add_option("--projected", spec.projected, "Variables to project out");
    cmd->add_option("--count", spec.count, "Number of polyhedra");
    cmd->add_option("--seed", spec.seed, "Random seed");
  };
  add_spec(gen);
  gen->add_option("--out", gen_out, "Output directory");

  // project
  std::vector<std::string> files;
  Elimination elim;
  SolveFlags solve;
  std::string out_path, format = "poly", save_regions;
  auto* proj = app.add_subcommand("project", "Project polyhedra");
  proj->add_option("files", files, "poly v1 input files")->required();
  add_elimination(proj, elim);
  add_solve_flags(proj, solve);
  proj->add_option("--out", out_path, "Output file (one input) or directory");
  proj->add_option("--format", format, "poly, csv or dot")->check(CLI::IsMember({"poly", "csv", "dot"}));
  proj->add_option("--save-regions", save_regions, "Write the parametric LP regions (one input only)");

  // hull
  std::string hull_a, hull_b;
  auto* hull = app.add_subcommand("hull", "Closed convex hull of two polyhedra");
  hull->add_option("first", hull_a)->required();
  hull->add_option("second", hull_b)->required();
  add_solve_flags(hull, solve);
  hull->add_option("--out", out_path, "Output file");

  // verify
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t oracle_cap = 5000;
  std::string regions_file, fixture;
  double radius = 10;
  auto* verify = app.add_subcommand("verify", "Check coverings and compare with Fourier-Motzkin");
  verify->add_option("files", files, "poly v1 input files");
  verify->add_option("--fixture", fixture, "example1 or pyramid[:k] instead of files");
  add_elimination(verify, elim);
  add_solve_flags(verify, solve);
  verify->add_option("--samples", samples, "Random parameter samples")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("--radius", radius, "Sampling radius around the interior point");
  verify->add_option("--oracle-cap", oracle_cap, "Largest Fourier-Motzkin step to attempt");
  verify->add_option("--regions", regions_file, "Check this saved region file instead of a fresh solve");

  // bench
  std::string thread_list = "1,2,4";
  std::string sched_choice = "both";
  std::size_t reps = 10;
  auto* bench = app.add_subcommand("bench", "Time projections over thread counts");
  bench->add_option("files", files, "poly v1 input files (otherwise generated)");
  add_elimination(bench, elim);
  add_spec(bench);
  bench->add_option("--threads", thread_list, "Comma-separated thread counts");
  bench->add_option("--scheduler", sched_choice, "rounds, pool or both")
      ->check(CLI::IsMember({"rounds", "pool", "both"}));
  bench->add_option("--reps", reps, "Repetitions")->check(CLI::PositiveNumber);
  bench->add_option("--out", out_path, "CSV output file");

  // graph
  auto* graph = app.add_subcommand("graph", "Generation graph of the regions as DOT");
  graph->add_option("files", files, "One poly v1 input file");
  graph->add_option("--fixture", fixture, "example1 or pyramid[:k]");
  add_elimination(graph, elim);
  add_solve_flags(graph, solve);
  graph->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      spec.validate();
      fs::create_directories(gen_out);
      const auto polys = generate(spec);
      for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto path = (fs::path(gen_out) / spec.file_name(i)).string();
        write_poly_file(path, polys[i]);
        std::cout << path << '\n';
      }
      return 0;
    }

    if (proj->parsed()) {
      if (elim.list.empty() && !elim.count) throw InputError("give --eliminate or --project-count");
      if (!save_regions.empty() && files.size() != 1) throw InputError("--save-regions needs exactly one input");
      const bool to_dir = files.size() > 1 && !out_path.empty();
      if (to_dir) fs::create_directories(out_path);
      std::string combined;
      if (format == "csv") combined = csv_header() + '\n';
      for (const auto& f : files) {
        const auto p = load(f);
        const auto e = elim.resolve(p.dim);
        auto opts = solve.project_options();
        opts.keep_solution = format == "dot" || !save_regions.empty();
        const auto start = std::chrono::steady_clock::now();
        auto res = project_detailed(p, e, opts);
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!save_regions.empty()) {
          const std::size_t k = res.encoding ? res.encoding->kept.size() : 0;
          emit(save_regions, res.solution ? format_solution(*res.solution, k) : format_solution({}, k));
        }
        std::string text;
        if (format == "poly") {
          text = format_poly(res.polyhedron);
        } else if (format == "dot") {
          text = generation_dot(res.solution ? *res.solution : PLPSolution{});
        } else {
          BenchRecord r{stem_of(f), opts.threads, opts.scheduler, 0, wall, res.stats};
          text = csv_row(r) + '\n';
        }
        if (to_dir) {
          const char* ext = format == "poly" ? ".poly" : format == "dot" ? ".dot" : ".csv";
          emit((fs::path(out_path) / (stem_of(f) + ext)).string(), format == "csv" ? csv_header() + '\n' + text : text);
        } else {
          if (files.size() > 1 && format != "csv") combined += "# " + f + '\n';
          combined += text;
        }
      }
      if (!to_dir) emit(out_path, combined);
      return 0;
    }

    if (hull->parsed()) {
      const auto a = load(hull_a), b = load(hull_b);
      if (a.dim != b.dim) throw InputError("dimensions differ");
      emit(out_path, format_poly(convex_hull(a, b, solve.project_options())));
      return 0;
    }

    if (verify->parsed()) {
      bool ok = true;
      CoveringOptions cov;
      cov.samples = samples;
      cov.seed = seed;
      if (!fixture.empty()) {
        const auto inst = load_fixture(fixture);
        PLPSolution sol;
        if (!regions_file.empty()) {
          std::ifstream in(regions_file);
          if (!in) throw InputError("cannot open " + regions_file);
          sol = parse_solution(in);
        } else {
          sol = solve_parallel(inst.lp, inst.pobj, solve.threads, parse_scheduler(solve.scheduler));
        }
        const auto rep = verify_covering(inst.lp, inst.pobj, sol.regions, cov);
        print_report(fixture + " (" + std::to_string(sol.regions.size()) + " regions)", rep);
        ok = rep.passed();
      } else {
        if (files.empty()) throw InputError("give input files or --fixture");
        if (elim.list.empty() && !elim.count) throw InputError("give --eliminate or --project-count");
        if (!regions_file.empty() && files.size() != 1) throw InputError("--regions needs exactly one input");
        for (const auto& f : files) {
          const auto p = load(f);
          const auto e = elim.resolve(p.dim);
          auto opts = solve.project_options();
          opts.keep_solution = true;
          auto res = project_detailed(p, e, opts);
          bool pass = true;
          if (res.encoding && res.solution) {
            if (!regions_file.empty()) {
              std::ifstream in(regions_file);
              if (!in) throw InputError("cannot open " + regions_file);
              try {
                *res.solution = parse_solution(in);
              } catch (const ParseError& pe) {
                throw InputError(regions_file + ": " + pe.what());
              }
            }
            const auto& enc = *res.encoding;
            cov.center.clear();
            for (std::size_t k : enc.kept) cov.center.push_back(enc.interior[k]);
            cov.radius = Rational(radius);
            const auto rep = verify_covering(enc.lambda_lp, enc.pobj, res.solution->regions, cov);
            print_report(f + " covering (" + std::to_string(res.solution->regions.size()) + " regions)", rep);
            pass = rep.passed();
          } else {
            std::cout << f << " covering: trivial projection, nothing to sample\n";
          }
          try {
            FmOptions fm;
            fm.cap = oracle_cap;
            const bool same = same_set(res.polyhedron, fm_project(p, e, fm));
            std::cout << f << " oracle: " << (same ? "matches" : "DIFFERS from") << " Fourier-Motzkin\n";
            pass = pass && same;
          } catch (const OracleCapExceeded& ex) {
            std::cout << f << " oracle: skipped (" << ex.what() << ")\n";
          }
          std::cout << (pass ? "PASS " : "FAIL ") << f << '\n';
          ok = ok && pass;
        }
      }
      return ok ? 0 : 1;
    }

    if (bench->parsed()) {
      BenchConfig cfg;
      cfg.reps = reps;
      cfg.threads.clear();
      std::stringstream ss(thread_list);
      for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        unsigned long t = 0;
        try {
          t = std::stoul(tok, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != tok.size() || t == 0) throw InputError("bad thread count '" + tok + "'");
        cfg.threads.push_back(static_cast<unsigned>(t));
      }
      if (cfg.threads.empty()) throw InputError("no thread counts");
      if (sched_choice == "both")
        cfg.schedulers = {Scheduler::fan_out_rounds, Scheduler::dynamic_pool};
      else
        cfg.schedulers = {parse_scheduler(sched_choice)};
      std::vector<BenchJob> jobs;
      if (files.empty()) {
        spec.validate();
        const auto polys = generate(spec);
        for (std::size_t i = 0; i < polys.size(); ++i) {
          std::vector<std::size_t> e;
          if (!elim.list.empty() || elim.count)
            e = elim.resolve(polys[i].dim);
          else
            for (std::size_t j = 0; j < spec.projected; ++j) e.push_back(j);
          jobs.push_back({stem_of(spec.file_name(i)), polys[i], e});
        }
      } else {
        if (elim.list.empty() && !elim.count) throw InputError("give --eliminate or --project-count");
        for (const auto& f : files) {
          auto p = load(f);
          auto e = elim.resolve(p.dim);
          jobs.push_back({stem_of(f), std::move(p), std::move(e)});
        }
      }
      const auto records = run_bench(jobs, cfg);
      std::string text = csv_header() + '\n';
      for (const auto& r : records) text += csv_row(r) + '\n';
      for (const auto& s : summarize(records)) text += csv_row(s) + '\n';
      emit(out_path, text);
      return 0;
    }

    if (graph->parsed()) {
      PLPSolution sol;
      if (!fixture.empty()) {
        const auto inst = load_fixture(fixture);
        sol = solve_parallel(inst.lp, inst.pobj, solve.threads, parse_scheduler(solve.scheduler));
      } else {
        if (files.size() != 1) throw InputError("graph needs one input file or --fixture");
        if (elim.list.empty() && !elim.count) throw InputError("give --eliminate or --project-count");
        const auto p = load(files[0]);
        auto opts = solve.project_options();
        opts.keep_solution = true;
        auto res = project_detailed(p, elim.resolve(p.dim), opts);
        if (res.solution) sol = std::move(*res.solution);
      }
      emit(out_path, generation_dot(sol));
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const PlpError& e) {
    std::cerr << "hard error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
