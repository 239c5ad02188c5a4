#include "pplp/fixtures.hpp"
#include "pplp/inequality_lp.hpp"
#include "pplp/lp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pplp;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Rational value(std::span<const Rational> c, std::span<const Rational> x) { return dot(c, x); }

// A fixed float backend answer, to exercise certification and the fallback.
class FixedBackend final : public FloatLpBackend {
public:
  explicit FixedBackend(FloatBackendResult r) : r_(std::move(r)) {}
  FloatBackendResult solve(const StandardLP&, std::span<const Rational>) const override { return r_; }

private:
  FloatBackendResult r_;
};

// Random {x >= 0 : A x <= b} with slack columns; b > 0 so the origin is feasible.
StandardLP random_slack_lp(std::mt19937_64& rng, std::size_t m, std::size_t d) {
  std::uniform_int_distribution<int> coef(-6, 9);
  std::uniform_int_distribution<int> rhs(1, 20);
  RationalMatrix a(m, d + m);
  RationalVector b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) a(i, j) = coef(rng);
    a(i, d + i) = 1;
    b[i] = rhs(rng);
  }
  return StandardLP(std::move(a), std::move(b));
}

}  // namespace

TEST(Basis, FromBasicAndNonbasic) {
  auto b = Basis::from_basic({3, 0}, 4);
  EXPECT_EQ(b.basic, (std::vector<Index>{0, 3}));
  EXPECT_EQ(b.nonbasic, (std::vector<Index>{1, 2}));
  EXPECT_EQ(b, Basis::from_nonbasic({2, 1}, 4));
  EXPECT_TRUE(b.well_formed(2, 4));
  EXPECT_FALSE(b.well_formed(3, 4));
}

TEST(Example1, CertifiedOptimumAndReducedCosts) {
  auto inst = example1();
  const auto c = vec({1, 1, 0, 0});
  const auto basis = Basis::from_basic({0, 1}, 4);
  auto x = exact_point(inst.lp, basis);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, vec({3, 3, 0, 0}));
  EXPECT_EQ(reduced_costs(inst.lp, basis, c), (RationalVector{Rational(-1, 2), Rational(-1, 2)}));
  auto cert = certify(inst.lp, basis, c);
  EXPECT_TRUE(cert.certified);
  EXPECT_EQ(cert.x, vec({3, 3, 0, 0}));

  auto out = solve_lp(inst.lp, c);
  ASSERT_EQ(out.status, LPStatus::optimal);
  EXPECT_EQ(out.basis, basis);
  EXPECT_EQ(out.x, vec({3, 3, 0, 0}));
}

TEST(Example1, OtherVerticesDoNotCertify) {
  auto inst = example1();
  const auto c = vec({1, 1, 0, 0});
  EXPECT_FALSE(certify(inst.lp, Basis::from_nonbasic({0, 1}, 4), c).certified);
  // x1, x3 nonbasic: x2 = -6, primal infeasible.
  EXPECT_FALSE(certify(inst.lp, Basis::from_nonbasic({0, 2}, 4), c).certified);
}

TEST(Example1, DualDegeneracy) {
  auto inst = example1();
  const auto c = vec({-1, 0, 0, 0});
  auto origin = certify(inst.lp, Basis::from_nonbasic({0, 1}, 4), c);
  auto other = certify(inst.lp, Basis::from_nonbasic({0, 3}, 4), c);
  ASSERT_TRUE(origin.certified);
  ASSERT_TRUE(other.certified);
  EXPECT_EQ(origin.x, vec({0, 0, 6, 6}));
  EXPECT_EQ(other.x, vec({0, 2, 8, 0}));
  EXPECT_EQ(value(c, origin.x), 0);
  EXPECT_EQ(value(c, other.x), 0);
}

TEST(ExactPoint, SingularBasis) {
  StandardLP lp(RationalMatrix::from_rows({vec({1, 2, 1, 0}), vec({2, 4, 0, 1})}), vec({1, 1}));
  EXPECT_FALSE(exact_point(lp, Basis::from_basic({0, 1}, 4)));
  EXPECT_THROW(reduced_costs(lp, Basis::from_basic({0, 1}, 4), vec({1, 0, 0, 0})), InvalidBasis);
  EXPECT_FALSE(certify(lp, Basis::from_basic({0, 1}, 4), vec({1, 0, 0, 0})).certified);
}

TEST(SolveLp, InfeasibleAndUnbounded) {
  // x1 + x2 = -1 has no solution with x >= 0.
  StandardLP infeasible(RationalMatrix::from_rows({vec({1, 1})}), vec({-1}));
  EXPECT_EQ(solve_lp(infeasible, vec({1, 0})).status, LPStatus::infeasible);
  EXPECT_EQ(exact_lp(infeasible, vec({1, 0})).status, LPStatus::infeasible);

  StandardLP unbounded(RationalMatrix::from_rows({vec({1, -1})}), vec({1}));
  EXPECT_EQ(solve_lp(unbounded, vec({1, 0})).status, LPStatus::unbounded);
  EXPECT_EQ(exact_lp(unbounded, vec({1, 0})).status, LPStatus::unbounded);
}

TEST(SolveLp, WrongFloatBasisFallsBackToExact) {
  auto inst = example1();
  FixedBackend wrong({FloatStatus::optimal, Basis::from_nonbasic({0, 1}, 4)});
  auto out = solve_lp(inst.lp, vec({1, 1, 0, 0}), wrong);
  ASSERT_EQ(out.status, LPStatus::optimal);
  EXPECT_EQ(out.x, vec({3, 3, 0, 0}));

  FixedBackend failed({FloatStatus::failed, {}});
  out = solve_lp(inst.lp, vec({1, 1, 0, 0}), failed);
  ASSERT_EQ(out.status, LPStatus::optimal);
  EXPECT_EQ(out.x, vec({3, 3, 0, 0}));

  // A wrong "infeasible" claim is not trusted either.
  FixedBackend liar({FloatStatus::infeasible, {}});
  EXPECT_EQ(solve_lp(inst.lp, vec({1, 1, 0, 0}), liar).status, LPStatus::optimal);
}

TEST(SolveLp, WithIndependentRows) {
  auto a = RationalMatrix::from_rows({vec({1, 1, 0}), vec({2, 2, 0}), vec({0, 1, 1})});
  auto lp = StandardLP::with_independent_rows(a, vec({1, 2, 1}));
  ASSERT_TRUE(lp);
  EXPECT_EQ(lp->rows(), 2u);
  EXPECT_FALSE(StandardLP::with_independent_rows(a, vec({1, 3, 1})));
}

TEST(SolveLp, FloatAndExactAgreeOnRandomInstances) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> cd(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    auto lp = random_slack_lp(rng, 4, 4);
    RationalVector c(lp.cols());
    for (std::size_t j = 0; j < 4; ++j) c[j] = cd(rng);
    auto fast = solve_lp(lp, c);
    auto slow = exact_lp(lp, c);
    ASSERT_EQ(fast.status, slow.status) << "trial " << trial;
    if (fast.status != LPStatus::optimal) continue;
    EXPECT_EQ(value(c, fast.x), value(c, slow.x));
    EXPECT_TRUE(certify(lp, fast.basis, c).certified);
  }
}

TEST(SolveLp, WeakDualitySampling) {
  // Any feasible point has objective value at most the certified optimum.
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> cd(-5, 5);
  std::uniform_int_distribution<int> pt(0, 40);
  for (int trial = 0; trial < 30; ++trial) {
    auto lp = random_slack_lp(rng, 5, 3);
    RationalVector c(lp.cols());
    for (std::size_t j = 0; j < 3; ++j) c[j] = cd(rng);
    auto out = solve_lp(lp, c);
    if (out.status != LPStatus::optimal) continue;
    const Rational best = value(c, out.x);
    for (int s = 0; s < 200; ++s) {
      RationalVector x(lp.cols());
      for (std::size_t j = 0; j < 3; ++j) x[j] = Rational(pt(rng), 10);
      bool feasible = true;
      for (std::size_t i = 0; i < lp.rows(); ++i) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < 3; ++j) lhs += lp.a()(i, j) * x[j];
        x[3 + i] = lp.b()[i] - lhs;
        if (x[3 + i] < 0) feasible = false;
      }
      if (feasible) EXPECT_LE(value(c, x), best);
    }
  }
}

TEST(ExactLp, StartBasisSkipsPhaseOne) {
  auto inst = example1();
  auto start = Basis::from_nonbasic({0, 1}, 4);
  auto out = exact_lp(inst.lp, vec({1, 1, 0, 0}), &start);
  ASSERT_EQ(out.status, LPStatus::optimal);
  EXPECT_EQ(out.x, vec({3, 3, 0, 0}));
}

TEST(Maximize, FreeVariables) {
  InequalityProblem p;
  p.dim = 2;
  p.add_le(vec({1, 0}), 2);
  p.add_le(vec({0, 1}), 3);
  p.add_le(vec({-1, -1}), 10);
  p.objective = vec({-1, -1});
  auto r = maximize(p);
  ASSERT_EQ(r.status, LPStatus::optimal);
  EXPECT_EQ(r.value, 10);
  EXPECT_EQ(r.x[0] + r.x[1], -10);

  p.objective = vec({1, -2});
  r = maximize(p);
  ASSERT_EQ(r.status, LPStatus::optimal);
  EXPECT_EQ(r.value, 2 + 2 * 12);

  p.add_eq(vec({1, 1}), 100);
  EXPECT_EQ(maximize(p).status, LPStatus::infeasible);

  InequalityProblem open;
  open.dim = 1;
  open.add_le(vec({-1}), 0);
  open.objective = vec({1});
  EXPECT_EQ(maximize(open).status, LPStatus::unbounded);
}
