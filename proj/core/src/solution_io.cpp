#include "pplp/solution_io.hpp"

#include "pplp/polyhedron.hpp"

#include <sstream>

namespace pplp {

std::string format_solution(const PLPSolution& sol, std::size_t parameters) {
  std::ostringstream out;
  out << "plp v1 " << parameters << '\n';
  for (std::size_t i = 0; i < sol.regions.size(); ++i) {
    const auto& r = sol.regions[i];
    out << "region " << i << " basis " << format_basis(r.basis) << '\n';
    for (const auto& c : r.constraints) {
      for (const auto& a : c.coeffs) out << a.get_str() << ' ';
      out << c.bound.get_str() << '\n';
    }
    out << "optimum";
    for (const auto& x : r.optimum) out << ' ' << format_rational(x);
    out << "\nparent " << (r.parent ? std::to_string(*r.parent) : std::string("none")) << '\n';
  }
  return out.str();
}

namespace {

std::vector<Index> parse_index_set(const std::string& text, std::size_t line) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') throw ParseError(line, "bad basis '" + text + "'");
  std::vector<Index> out;
  std::istringstream ss(text.substr(1, text.size() - 2));
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      out.push_back(static_cast<Index>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw ParseError(line, "bad basis index '" + tok + "'");
    }
  }
  return out;
}

}  // namespace

PLPSolution parse_solution(std::istream& in) {
  PLPSolution sol;
  std::size_t lineno = 0;
  std::size_t k = 0;
  bool header = false;
  std::vector<Index> nonbasic;
  ConstraintList constraints;
  bool open = false;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::istringstream ss(raw);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (toks.empty() || toks[0].front() == '#') continue;
    try {
      if (!header) {
        if (toks.size() != 3 || toks[0] != "plp" || toks[1] != "v1") throw ParseError(lineno, "expected 'plp v1 <k>'");
        k = std::stoul(toks[2]);
        header = true;
      } else if (toks[0] == "region") {
        if (open) throw ParseError(lineno, "region without parent line");
        if (toks.size() != 4 || toks[2] != "basis") throw ParseError(lineno, "expected 'region <id> basis {..}'");
        if (std::stoul(toks[1]) != sol.regions.size()) throw ParseError(lineno, "region ids must be consecutive");
        nonbasic = parse_index_set(toks[3], lineno);
        constraints.clear();
        open = true;
        sol.regions.emplace_back();
      } else if (toks[0] == "optimum") {
        if (!open) throw ParseError(lineno, "optimum outside a region");
        RationalVector x;
        for (std::size_t i = 1; i < toks.size(); ++i) x.push_back(parse_rational(toks[i]));
        auto& r = sol.regions.back();
        r = Region(constraints, std::vector<RationalVector>(constraints.size()), x,
                   Basis::from_nonbasic(nonbasic, x.size()), RationalVector(k));
      } else if (toks[0] == "parent") {
        if (!open || toks.size() != 2) throw ParseError(lineno, "bad parent line");
        auto& r = sol.regions.back();
        if (toks[1] != "none") {
          r.parent = std::stoul(toks[1]);
          if (*r.parent + 1 >= sol.regions.size()) throw ParseError(lineno, "parent must be an earlier region");
        }
        sol.generation_edges.emplace_back(r.parent, sol.regions.size() - 1);
        open = false;
      } else {
        if (!open) throw ParseError(lineno, "constraint outside a region");
        if (toks.size() != k + 1) throw ParseError(lineno, "expected " + std::to_string(k + 1) + " values");
        RationalVector a(k);
        for (std::size_t j = 0; j < k; ++j) a[j] = parse_rational(toks[j]);
        auto c = canonicalize(a, parse_rational(toks[k]));
        if (std::holds_alternative<TriviallyFalse>(c)) {
          constraints.push_back(false_constraint(k));
        } else if (auto* cc = std::get_if<CanonicalConstraint>(&c)) {
          constraints.push_back(std::move(*cc));
        }
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!header) throw ParseError(lineno, "missing header");
  if (open) throw ParseError(lineno, "unterminated region");
  sol.stats.regions = sol.regions.size();
  return sol;
}

PLPSolution parse_solution_string(const std::string& text) {
  std::istringstream in(text);
  return parse_solution(in);
}

std::string generation_dot(const PLPSolution& sol) {
  std::ostringstream out;
  out << "digraph generation {\n";
  for (std::size_t i = 0; i < sol.regions.size(); ++i) {
    out << "  r" << i << " [label=\"" << i << "\"";
    if (!sol.regions[i].parent) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& [parent, child] : sol.generation_edges)
    if (parent) out << "  r" << *parent << " -> r" << child << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pplp
