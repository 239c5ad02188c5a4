#include "pplp/redundancy.hpp"

#include "pplp/inequality_lp.hpp"

#include <map>
#include <mutex>
#include <thread>

namespace pplp {

std::variant<ConstraintList, EmptyPolyhedron> syntactic_minimize(std::span<const CanonicalConstraint> cs) {
  ConstraintList out;
  std::map<IntegerVector, std::size_t> by_direction;  // inequality direction -> slot in out
  std::map<CanonicalConstraint, bool> equalities;
  std::vector<Rational> bounds;  // primitive bound per slot (inequalities)
  for (const auto& c : cs) {
    const auto canon = canonicalize(c);
    if (std::holds_alternative<TriviallyFalse>(canon)) return EmptyPolyhedron{};
    if (std::holds_alternative<TriviallyTrue>(canon)) continue;
    const auto& cc = std::get<CanonicalConstraint>(canon);
    if (cc.is_equality()) {
      if (equalities.emplace(cc, true).second) {
        out.push_back(cc);
        bounds.emplace_back(0);
      }
      continue;
    }
    auto prim = primitive_direction(cc);
    auto [it, inserted] = by_direction.emplace(prim.direction, out.size());
    if (inserted) {
      out.push_back(cc);
      bounds.push_back(prim.bound);
    } else if (prim.bound < bounds[it->second]) {
      out[it->second] = cc;
      bounds[it->second] = prim.bound;
    }
  }
  return out;
}

SatResult check_sat(std::span<const CanonicalConstraint> weak, const CanonicalConstraint& negated,
                    const FloatLpBackend& backend) {
  if (negated.is_equality()) throw std::invalid_argument("check_sat: negated constraint must be an inequality");
  const std::size_t d = negated.dim();
  InequalityProblem p;
  p.dim = d + 1;  // x, then the slack t
  for (const auto& c : weak) {
    RationalVector row(d + 1);
    for (std::size_t j = 0; j < d; ++j) row[j] = c.coeffs[j];
    if (c.is_equality())
      p.add_eq(std::move(row), Rational(c.bound));
    else
      p.add_le(std::move(row), Rational(c.bound));
  }
  RationalVector neg(d + 1);
  for (std::size_t j = 0; j < d; ++j) neg[j] = -negated.coeffs[j];
  neg[d] = 1;
  p.add_le(std::move(neg), Rational(-negated.bound));
  RationalVector cap(d + 1);
  cap[d] = 1;
  p.add_le(std::move(cap), Rational(1));
  p.objective.assign(d + 1, Rational(0));
  p.objective[d] = 1;

  const auto r = maximize(p, backend);
  SatResult out;
  if (r.status == LPStatus::infeasible) {
    out.status = SatStatus::empty;
    return out;
  }
  if (r.status != LPStatus::optimal) throw std::logic_error("check_sat: slack LP unbounded");
  if (sgn(r.x[d]) > 0) {
    out.status = SatStatus::witness;
    out.witness.assign(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return out;
}

namespace {

// Tests constraint i against every constraint not yet flagged redundant.
// Returns false if the system turned out to be empty.
bool test_one(std::span<const CanonicalConstraint> cs, std::size_t i, RedundancyFlags& flags,
              std::vector<RationalVector>& witnesses, const FloatLpBackend& backend) {
  ConstraintList others;
  others.reserve(cs.size());
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (j != i && !flags.test(j)) others.push_back(cs[j]);
  }
  const auto r = check_sat(others, cs[i], backend);
  switch (r.status) {
    case SatStatus::empty: return false;
    case SatStatus::unsat: flags.set(i); break;
    case SatStatus::witness: witnesses[i] = r.witness; break;
  }
  return true;
}

}  // namespace

std::variant<IrredundantSystem, EmptyPolyhedron> eliminate_redundancy(std::span<const CanonicalConstraint> cs,
                                                                      const RedundancyOptions& options) {
  const FloatLpBackend& backend = options.backend ? *options.backend : default_float_backend();
  const std::size_t n = cs.size();
  RedundancyFlags flags(n);
  std::vector<RationalVector> witnesses(n);
  std::atomic<bool> empty{false};

  if (options.mode == RedundancyMode::sequential || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      if (cs[i].is_equality()) continue;
      if (!test_one(cs, i, flags, witnesses, backend)) return EmptyPolyhedron{};
    }
  } else {
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          try {
            for (std::size_t i; (i = next.fetch_add(1)) < n && !empty.load();) {
              if (cs[i].is_equality()) continue;
              if (!test_one(cs, i, flags, witnesses, backend)) empty.store(true);
            }
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            empty.store(true);
          }
        });
      }
    }
    if (error) std::rethrow_exception(error);
    if (empty.load()) return EmptyPolyhedron{};
  }

  IrredundantSystem out;
  for (std::size_t i = 0; i < n; ++i) {
    if (flags.test(i)) continue;
    out.kept.push_back(cs[i]);
    out.witnesses.push_back(std::move(witnesses[i]));
  }
  return out;
}

std::variant<IrredundantSystem, EmptyPolyhedron> minimize_constraints(std::span<const CanonicalConstraint> cs,
                                                                      const RedundancyOptions& options) {
  auto syn = syntactic_minimize(cs);
  if (std::holds_alternative<EmptyPolyhedron>(syn)) return EmptyPolyhedron{};
  return eliminate_redundancy(std::get<ConstraintList>(syn), options);
}

}  // namespace pplp
