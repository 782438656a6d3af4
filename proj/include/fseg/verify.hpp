#pragma once

// The invariant suite run by `fsegtool verify`. Checks run in a fixed order
// and stop at the first failure.

#include <string>
#include <vector>

#include "chainprod.hpp"
#include "ferrers.hpp"
#include "io.hpp"
#include "metric.hpp"

namespace fseg {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail; // set on failure
};

struct VerifyReport {
  FinalSegment segment;
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

namespace detail {

inline std::string state_pair(const EnvelopeLattice& env, std::size_t p, std::size_t q) {
  return to_string(env[p]) + ", " + to_string(env[q]);
}

inline CheckResult check_language(const EnvelopeLattice& env) {
  const auto r = language_equals_segment(env.automaton(), env.target());
  if (r.equal) return {"language", true, ""};
  return {"language", false, "languages differ on " + display(*r.witness)};
}

inline CheckResult check_distances(const EnvelopeLattice& env) {
  for (StateId p = 0; p < env.size(); ++p)
    for (StateId q = 0; q < env.size(); ++q)
      if (dist(env, p, q) != hdist(env[p], env[q]))
        return {"distance", false, "automaton and algebraic distances differ at " + state_pair(env, p, q)};
  return {"distance", true, ""};
}

inline CheckResult check_axioms(const MetricSpace& m, const EnvelopeLattice& env) {
  if (auto v = check_metric_axioms(m))
    return {"axioms", false, v->axiom + " fails at " + state_pair(env, v->p, v->q) + ", " + to_string(env[v->r])};
  return {"axioms", true, ""};
}

inline CheckResult check_convex(const MetricSpace& m, const EnvelopeLattice& env) {
  const auto r = check_convexity(m);
  if (r.convex) return {"convexity", true, ""};
  return {"convexity", false,
          display(*r.alpha) + "·" + display(*r.beta) + " has no midpoint between " + state_pair(env, r.p, r.q)};
}

inline CheckResult check_duality(const EnvelopeLattice& env) {
  std::vector<std::pair<FinalSegment, FinalSegment>> forms;
  for (StateId p = 0; p < env.size(); ++p) forms.push_back(metric_form_pair(env, p));
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = 0; j < forms.size(); ++j)
      if (hdist(forms[i].first, forms[j].first) != hdist(forms[i].second, forms[j].second))
        return {"duality", false, "fails at " + state_pair(env, i, j)};
  return {"duality", true, ""};
}

inline CheckResult check_rigidity(const MetricSpace& m, const EnvelopeLattice& env) {
  if (!no_proper_isometric_subspace(m)) return {"rigidity", false, "a proper isometric subspace exists"};
  if (!is_rigid_over_base(pointed_space(env))) return {"rigidity", false, "a non-identity self-isometry fixes x and y"};
  return {"rigidity", true, ""};
}

inline CheckResult check_round_trip(const EnvelopeLattice& env) {
  const auto& gens = env.target().basis();
  const ChainProduct grid = product_of(gens);
  for (const auto& e : env.elements()) {
    const FinalSegment back = psi(grid, phi(env, e), gens, env.target().alphabet());
    if (back != e) return {"round_trip", false, "psi(phi(" + to_string(e) + ")) = " + to_string(back)};
  }
  return {"round_trip", true, ""};
}

inline CheckResult check_ferrers(const FinalSegment& f) {
  const auto r = check_ferrers_equivalence(f);
  if (r.agree()) return {"ferrers_equivalence", true, ""};
  return {"ferrers_equivalence", false,
          std::string("residual chain test says ") + (r.segment ? "true" : "false") + ", envelope chain test says " +
              (r.orderable ? "true" : "false")};
}

inline CheckResult check_factorization(const FinalSegment& f, const std::vector<FinalSegment>& factors, std::size_t index) {
  const std::string name = "sum_theorem/" + std::to_string(index);
  const FinalSegment product = concat_all(f.alphabet(), factors);
  if (product != f) return {name, false, "factors multiply to " + to_string(product)};
  FinalSegment left = FinalSegment::universe(f.alphabet());
  for (const auto& g : factors) {
    if (g.is_empty()) return {name, false, "empty factor"};
    if (!verify_sum_theorem(left, g)) return {name, false, "fails for " + to_string(left) + " · " + to_string(g)};
    left = concat(left, g);
  }
  return {name, true, ""};
}

} // namespace detail

/// Runs every check on the spec's segment. Throws precondition_error for ∅.
inline VerifyReport verify_spec(const ProblemSpec& spec) {
  VerifyReport report{spec.segment, {}};
  const EnvelopeLattice env = build_envelope(spec.segment);
  const MetricSpace m = metric_space(env);
  auto run = [&](CheckResult r) {
    report.checks.push_back(std::move(r));
    return report.checks.back().ok;
  };
  if (!run(detail::check_language(env))) return report;
  if (!run(detail::check_distances(env))) return report;
  if (!run(detail::check_axioms(m, env))) return report;
  if (!run(detail::check_convex(m, env))) return report;
  if (!run(detail::check_duality(env))) return report;
  if (!run(detail::check_rigidity(m, env))) return report;
  if (!run(detail::check_round_trip(env))) return report;
  if (!run(detail::check_ferrers(spec.segment))) return report;
  for (std::size_t i = 0; i < spec.factorizations.size(); ++i)
    if (!run(detail::check_factorization(spec.segment, spec.factorizations[i], i))) return report;
  return report;
}

inline json to_json(const VerifyReport& r) {
  json out;
  out["segment"] = to_string(r.segment);
  out["ok"] = r.ok();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json entry{{"check", c.name}, {"ok", c.ok}};
    if (!c.ok) entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  out["checks"] = checks;
  return out;
}

} // namespace fseg
