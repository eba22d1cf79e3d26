#include "pacres/proof.hpp"

#include <stdexcept>

namespace pacres {

ResolveResult resolve(const Clause& c1, const Clause& c2, Var pivot) {
  const auto p1 = c1.phase(pivot);
  const auto p2 = c2.phase(pivot);
  if (!p1 || !p2 || *p1 == *p2) return {ResolveOutcome::NotResolvable, Clause()};

  std::vector<Literal> merged;
  merged.reserve(c1.width() + c2.width());
  for (const Literal& l : c1.lits()) {
    if (l.var != pivot) merged.push_back(l);
  }
  for (const Literal& l : c2.lits()) {
    if (l.var != pivot) merged.push_back(l);
  }
  auto clause = Clause::try_make(std::move(merged));
  if (!clause) return {ResolveOutcome::Tautology, Clause()};
  return {ResolveOutcome::Resolved, std::move(*clause)};
}

CheckResult check_proof(const Cnf& phi, const ResolutionProof& proof,
                        bool require_refutation) {
  const auto fail = [](std::size_t i, std::string why) {
    return CheckResult{false, i, std::move(why)};
  };
  const auto parent_ok = [&](std::size_t i, std::size_t ref) {
    return ref < i && proof.steps[ref].rule != StepRule::TopMark;
  };

  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    switch (s.rule) {
      case StepRule::TopMark:
        break;
      case StepRule::Axiom:
        if (s.ref1 >= phi.clauses.size()) return fail(i, "axiom index out of range");
        if (!(phi.clauses[s.ref1] == s.clause)) return fail(i, "axiom clause mismatch");
        break;
      case StepRule::Weakening: {
        if (!parent_ok(i, s.ref1)) return fail(i, "bad weakening reference");
        if (!proof.steps[s.ref1].clause.subset_of(s.clause))
          return fail(i, "weakening parent is not a subclause");
        break;
      }
      case StepRule::Cut: {
        if (!parent_ok(i, s.ref1) || !parent_ok(i, s.ref2))
          return fail(i, "bad cut reference");
        const ResolveResult r = resolve(proof.steps[s.ref1].clause,
                                        proof.steps[s.ref2].clause, s.pivot);
        if (r.outcome != ResolveOutcome::Resolved)
          return fail(i, "cut does not resolve on pivot");
        if (!(r.clause == s.clause)) return fail(i, "cut resolvent mismatch");
        break;
      }
    }
  }
  if (require_refutation) {
    if (proof.steps.empty()) return fail(0, "empty proof is not a refutation");
    const ProofStep& last = proof.steps.back();
    if (last.rule == StepRule::TopMark || !last.clause.empty())
      return fail(proof.steps.size() - 1, "final step is not the empty clause");
  }
  return {};
}

ResolutionProof restrict_proof(const ResolutionProof& proof,
                               const PartialAssignment& rho, const Cnf& phi) {
  const RestrictedCnf restricted = restrict_cnf(phi, rho);
  if (restricted.bottom)
    throw std::invalid_argument("restrict_proof: restricted CNF is bottom");

  ResolutionProof out;
  out.steps.reserve(proof.steps.size());
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    if (s.rule == StepRule::TopMark) {
      out.steps.push_back(ProofStep::top());
      continue;
    }
    const RestrictedClause rc = restrict_clause(s.clause, rho);
    if (rc.top) {
      out.steps.push_back(ProofStep::top());
      continue;
    }
    switch (s.rule) {
      case StepRule::Axiom: {
        const std::int32_t idx = restricted.clause_index[s.ref1];
        // A witnessed-false axiom would have made the restriction bottom,
        // and a witnessed-true one makes this step top.
        if (idx < 0) throw std::logic_error("restrict_proof: axiom inconsistency");
        out.steps.push_back(
            ProofStep::axiom(static_cast<std::size_t>(idx), rc.clause));
        break;
      }
      case StepRule::Weakening:
        // The parent is a subclause, hence not witnessed true either.
        out.steps.push_back(ProofStep::weakening(s.ref1, rc.clause));
        break;
      case StepRule::Cut: {
        if (!rho.assigned(s.pivot)) {
          out.steps.push_back(ProofStep::cut(s.ref1, s.ref2, s.pivot, rc.clause));
        } else {
          // The parent holding the satisfied pivot literal is top; the
          // other parent restricts to a subclause of this step.
          const bool pivot_value = rho.value(s.pivot);
          const auto parent_phase = proof.steps[s.ref1].clause.phase(s.pivot);
          const std::size_t survivor =
              (parent_phase && *parent_phase == pivot_value) ? s.ref2 : s.ref1;
          out.steps.push_back(ProofStep::weakening(survivor, rc.clause));
        }
        break;
      }
      case StepRule::TopMark:
        break;  // handled above
    }
  }
  return out;
}

WeakeningFree eliminate_weakening(const ResolutionProof& proof, const Cnf& phi) {
  (void)phi;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  WeakeningFree out;
  out.step_map.assign(proof.steps.size(), kNone);

  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    switch (s.rule) {
      case StepRule::TopMark:
        break;
      case StepRule::Axiom:
        out.step_map[i] = out.proof.steps.size();
        out.proof.steps.push_back(s);
        break;
      case StepRule::Weakening:
        // The replacement of the parent is already a subclause of this step.
        if (out.step_map[s.ref1] == kNone)
          throw std::invalid_argument("eliminate_weakening: input proof invalid");
        out.step_map[i] = out.step_map[s.ref1];
        break;
      case StepRule::Cut: {
        const std::size_t a = out.step_map[s.ref1];
        const std::size_t b = out.step_map[s.ref2];
        if (a == kNone || b == kNone)
          throw std::invalid_argument("eliminate_weakening: input proof invalid");
        const Clause& ca = out.proof.steps[a].clause;
        const Clause& cb = out.proof.steps[b].clause;
        const auto pa = ca.phase(s.pivot);
        const auto pb = cb.phase(s.pivot);
        if (!pa) {
          out.step_map[i] = a;  // already a subclause of the resolvent
        } else if (!pb) {
          out.step_map[i] = b;
        } else {
          const ResolveResult r = resolve(ca, cb, s.pivot);
          if (r.outcome != ResolveOutcome::Resolved)
            throw std::invalid_argument("eliminate_weakening: input proof invalid");
          out.step_map[i] = out.proof.steps.size();
          out.proof.steps.push_back(
              ProofStep::cut(a, b, s.pivot, std::move(r.clause)));
        }
        break;
      }
    }
  }

  if (proof.steps.empty() || out.step_map.back() == kNone)
    throw std::invalid_argument("eliminate_weakening: input is not a refutation");
  // The replacement of the final step carries a subclause of the empty
  // clause; drop anything emitted after it.
  out.proof.steps.resize(out.step_map.back() + 1);
  return out;
}

std::string proof_to_text(const ResolutionProof& proof) {
  std::string out;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& s = proof.steps[i];
    out += std::to_string(i + 1);
    if (s.rule == StepRule::TopMark) {
      out += " top | top\n";
      continue;
    }
    for (const Literal& l : s.clause.lits()) {
      out += " " + std::to_string(l.to_dimacs());
    }
    out += " | ";
    switch (s.rule) {
      case StepRule::Axiom:
        out += "axiom " + std::to_string(s.ref1 + 1);
        break;
      case StepRule::Weakening:
        out += "weaken " + std::to_string(s.ref1 + 1);
        break;
      case StepRule::Cut:
        out += "cut " + std::to_string(s.ref1 + 1) + " " +
               std::to_string(s.ref2 + 1) + " " + std::to_string(s.pivot);
        break;
      case StepRule::TopMark:
        break;
    }
    out += "\n";
  }
  return out;
}

}  // namespace pacres
