#include "pplp/generator.hpp"
#include "pplp/redundancy.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace pplp;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

ConstraintList sorted(ConstraintList cs) {
  std::sort(cs.begin(), cs.end());
  return cs;
}

ConstraintList octagon_with_extras() {
  return {make_constraint({1, 0}, 2),   make_constraint({-1, 0}, 2), make_constraint({0, 1}, 2),
          make_constraint({0, -1}, 2),  make_constraint({1, 1}, 3),  make_constraint({1, -1}, 3),
          make_constraint({-1, 1}, 3),  make_constraint({-1, -1}, 3),
          make_constraint({1, 1}, 5),   // looser copy
          make_constraint({2, 1}, 10),  // implied by the box
          make_constraint({3, 0}, 6)};  // same as x <= 2
}

RedundancyOptions parallel(unsigned threads) {
  RedundancyOptions o;
  o.mode = RedundancyMode::parallel;
  o.threads = threads;
  return o;
}

}  // namespace

TEST(SyntacticMinimize, KeepsTightestPerDirection) {
  ConstraintList cs{make_constraint({1, 1}, 5), make_constraint({2, 2}, 3), make_constraint({1, 0}, 1),
                    make_constraint({1, 0}, 1), make_constraint({1, -1}, 0, Relation::equal),
                    make_constraint({-1, 1}, 0, Relation::equal)};
  auto r = syntactic_minimize(cs);
  ASSERT_TRUE(std::holds_alternative<ConstraintList>(r));
  EXPECT_EQ(sorted(std::get<ConstraintList>(r)),
            sorted({make_constraint({2, 2}, 3), make_constraint({1, 0}, 1),
                    make_constraint({1, -1}, 0, Relation::equal)}));
}

TEST(SyntacticMinimize, FalseRowIsEmpty) {
  ConstraintList cs{make_constraint({1, 0}, 1), false_constraint(2)};
  EXPECT_TRUE(std::holds_alternative<EmptyPolyhedron>(syntactic_minimize(cs)));
}

TEST(CheckSat, WitnessUnsatEmpty) {
  ConstraintList box{make_constraint({1, 0}, 1), make_constraint({-1, 0}, 0)};
  auto r = check_sat(box, make_constraint({2, 0}, 1));
  ASSERT_EQ(r.status, SatStatus::witness);
  EXPECT_GT(r.witness[0], Rational(1, 2));
  EXPECT_LE(r.witness[0], 1);

  EXPECT_EQ(check_sat(box, make_constraint({1, 0}, 1)).status, SatStatus::unsat);
  EXPECT_EQ(check_sat(box, make_constraint({1, 0}, 3)).status, SatStatus::unsat);

  ConstraintList none{make_constraint({1, 0}, -1), make_constraint({-1, 0}, 0)};
  EXPECT_EQ(check_sat(none, make_constraint({0, 1}, 0)).status, SatStatus::empty);
}

TEST(EliminateRedundancy, Octagon) {
  auto r = minimize_constraints(octagon_with_extras());
  ASSERT_TRUE(std::holds_alternative<IrredundantSystem>(r));
  const auto& sys = std::get<IrredundantSystem>(r);
  const auto all = octagon_with_extras();
  ConstraintList want(all.begin(), all.begin() + 8);
  EXPECT_EQ(sorted(sys.kept), sorted(want));
  ASSERT_EQ(sys.witnesses.size(), sys.kept.size());
  for (std::size_t i = 0; i < sys.kept.size(); ++i)
    for (std::size_t j = 0; j < sys.kept.size(); ++j)
      EXPECT_EQ(sys.kept[j].satisfied_by(sys.witnesses[i]), i != j);
}

TEST(EliminateRedundancy, ParallelMatchesSequential) {
  for (unsigned threads : {1u, 2u, 4u, 8u}) {
    auto seq = minimize_constraints(octagon_with_extras());
    auto par = minimize_constraints(octagon_with_extras(), parallel(threads));
    ASSERT_TRUE(std::holds_alternative<IrredundantSystem>(par));
    EXPECT_EQ(sorted(std::get<IrredundantSystem>(seq).kept), sorted(std::get<IrredundantSystem>(par).kept));
  }
}

TEST(EliminateRedundancy, EqualitiesKeptWithoutWitness) {
  ConstraintList cs{make_constraint({1, -1}, 0, Relation::equal), make_constraint({1, 0}, 1),
                    make_constraint({0, 1}, 2)};
  auto r = minimize_constraints(cs);
  ASSERT_TRUE(std::holds_alternative<IrredundantSystem>(r));
  const auto& sys = std::get<IrredundantSystem>(r);
  EXPECT_EQ(sorted(sys.kept), sorted({cs[0], cs[1]}));
  for (std::size_t i = 0; i < sys.kept.size(); ++i)
    if (sys.kept[i].is_equality()) EXPECT_TRUE(sys.witnesses[i].empty());
}

TEST(EliminateRedundancy, DetectsEmpty) {
  ConstraintList cs{make_constraint({1, 0}, -1), make_constraint({-1, 0}, 0), make_constraint({0, 1}, 1)};
  EXPECT_TRUE(std::holds_alternative<EmptyPolyhedron>(minimize_constraints(cs)));
  EXPECT_TRUE(std::holds_alternative<EmptyPolyhedron>(minimize_constraints(cs, parallel(4))));
}

TEST(EliminateRedundancy, PlantedRowsRemoved) {
  InstanceSpec spec;
  spec.constraints = 10;
  spec.redundant = 3;
  spec.variables = 4;
  spec.density = 3;
  spec.count = 20;
  spec.seed = 9;
  for (const auto& p : generate(spec)) {
    auto seq = minimize_constraints(p.constraints);
    auto par = minimize_constraints(p.constraints, parallel(4));
    ASSERT_TRUE(std::holds_alternative<IrredundantSystem>(seq));
    ASSERT_TRUE(std::holds_alternative<IrredundantSystem>(par));
    const auto& kept = std::get<IrredundantSystem>(seq).kept;
    EXPECT_EQ(sorted(kept), sorted(std::get<IrredundantSystem>(par).kept));
    for (std::size_t i = spec.constraints - spec.redundant; i < spec.constraints; ++i)
      EXPECT_EQ(std::count(kept.begin(), kept.end(), p.constraints[i]), 0);
  }
}
