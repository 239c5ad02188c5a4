#include "bench.hpp"

#include "pplp/fixtures.hpp"
#include "pplp/generator.hpp"
#include "pplp/solution_io.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace pplp;
using namespace pplp::cli;

namespace {

std::size_t count_fields(const std::string& line) { return std::count(line.begin(), line.end(), ',') + 1; }

}  // namespace

TEST(Generator, ShapeAndDeterminism) {
  InstanceSpec spec;
  spec.constraints = 7;
  spec.redundant = 2;
  spec.variables = 5;
  spec.density = 3;
  spec.count = 4;
  spec.seed = 42;
  auto a = generate(spec);
  auto b = generate(spec);
  ASSERT_EQ(a.size(), 4u);
  const RationalVector origin(5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].dim, 5u);
    EXPECT_EQ(a[i].constraints, b[i].constraints);
    ASSERT_EQ(a[i].constraints.size(), 7u);
    for (std::size_t r = 0; r < 5; ++r) {
      const auto& c = a[i].constraints[r];
      EXPECT_EQ(std::count_if(c.coeffs.begin(), c.coeffs.end(), [](const Integer& v) { return v != 0; }), 3);
    }
    for (const auto& c : a[i].constraints) EXPECT_TRUE(c.strictly_satisfied_by(origin));
  }
  EXPECT_NE(a[0].constraints, a[1].constraints);
  spec.seed = 43;
  EXPECT_NE(generate(spec)[0].constraints, a[0].constraints);
}

TEST(Generator, NamesAndValidation) {
  InstanceSpec spec;
  spec.constraints = 12;
  spec.redundant = 3;
  spec.variables = 10;
  spec.density = 4;
  spec.projected = 5;
  spec.count = 2;
  EXPECT_EQ(spec.name(), "12_3_2_10_5");
  EXPECT_EQ(spec.file_name(1), "12_3_2_10_5_1.poly");
  spec.density = 11;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec.density = 4;
  spec.redundant = 12;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec.redundant = 0;
  spec.projected = 11;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(SolutionIo, RoundTrip) {
  auto inst = example1();
  auto sol = solve_sequential(inst.lp, inst.pobj);
  const auto text = format_solution(sol, 2);
  EXPECT_EQ(text.rfind("plp v1 2\n", 0), 0u);
  auto back = parse_solution_string(text);
  ASSERT_EQ(back.regions.size(), sol.regions.size());
  for (std::size_t i = 0; i < sol.regions.size(); ++i) {
    EXPECT_EQ(back.regions[i].constraints, sol.regions[i].constraints);
    EXPECT_EQ(back.regions[i].optimum, sol.regions[i].optimum);
    EXPECT_EQ(back.regions[i].basis, sol.regions[i].basis);
    EXPECT_EQ(back.regions[i].parent, sol.regions[i].parent);
  }
  EXPECT_EQ(back.generation_edges, sol.generation_edges);
  EXPECT_EQ(format_solution(back, 2), text);
}

TEST(SolutionIo, CorruptInputRejected) {
  EXPECT_THROW(parse_solution_string("plp v2 2\n"), ParseError);
  EXPECT_THROW(parse_solution_string("plp v1 2\nregion 0 basis {0,1}\n1 1\n"), ParseError);
  EXPECT_THROW(parse_solution_string("plp v1 1\nregion 0 basis {0}\n1 0\noptimum 1 0\nparent 5\n"), ParseError);
}

TEST(SolutionIo, GenerationDot) {
  auto inst = example1();
  auto sol = solve_sequential(inst.lp, inst.pobj);
  const auto dot = generation_dot(sol);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), std::ptrdiff_t(sol.regions.size() - 1));
  EXPECT_NE(dot.find("peripheries=2"), std::string::npos);
}

TEST(Bench, SummaryStatistics) {
  std::vector<BenchRecord> rs;
  for (double t : {1.0, 3.0}) rs.push_back({"inst", 1, Scheduler::dynamic_pool, rs.size(), t, {}});
  for (double t : {0.5, 1.5}) rs.push_back({"inst", 2, Scheduler::dynamic_pool, rs.size(), t, {}});
  rs.push_back({"inst", 2, Scheduler::fan_out_rounds, 0, 1.0, {}});
  auto sum = summarize(rs);
  ASSERT_EQ(sum.size(), 3u);
  const BenchSummary* one = nullptr;
  const BenchSummary* two = nullptr;
  const BenchSummary* rounds = nullptr;
  for (const auto& s : sum) {
    if (s.scheduler == Scheduler::fan_out_rounds) rounds = &s;
    else if (s.threads == 1) one = &s;
    else two = &s;
  }
  ASSERT_TRUE(one && two && rounds);
  EXPECT_DOUBLE_EQ(one->mean_s, 2.0);
  EXPECT_DOUBLE_EQ(one->stddev_s, std::sqrt(2.0));
  ASSERT_TRUE(two->speedup);
  EXPECT_DOUBLE_EQ(*two->speedup, 2.0);
  EXPECT_FALSE(rounds->speedup);
  EXPECT_DOUBLE_EQ(rounds->stddev_s, 0.0);
}

TEST(Bench, CsvRowsMatchHeader) {
  BenchJob job{"ex1", example1_polygon(), {1}};
  BenchConfig cfg;
  cfg.threads = {1, 2};
  cfg.schedulers = {Scheduler::dynamic_pool, Scheduler::fan_out_rounds};
  cfg.reps = 2;
  auto rs = run_bench({job}, cfg);
  ASSERT_EQ(rs.size(), 8u);
  for (const auto& r : rs) {
    EXPECT_EQ(r.stats.regions, 2u);
    EXPECT_GE(r.wall_s, 0.0);
  }
  const auto n = count_fields(csv_header());
  EXPECT_EQ(n, 13u);
  EXPECT_EQ(count_fields(csv_row(rs[0])), n);
  for (const auto& s : summarize(rs)) {
    EXPECT_EQ(count_fields(csv_row(s)), n);
    EXPECT_EQ(csv_row(s).rfind("summary,ex1,", 0), 0u);
  }
}
