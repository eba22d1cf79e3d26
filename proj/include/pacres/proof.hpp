#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pacres/logic.hpp"
#include "pacres/types.hpp"

// Resolution proofs as checkable objects.
//
// A proof is a sequence of steps; each step carries a clause and a
// justification referring only to strictly earlier steps (or to an input
// clause).  A refutation ends with the empty clause.  Restricting a proof
// under a partial assignment turns witnessed-true steps into inert top
// markers and rewrites cuts whose pivot got assigned into weakenings of
// the surviving parent.

namespace pacres {

enum class StepRule { Axiom, Weakening, Cut, TopMark };

struct ProofStep {
  StepRule rule = StepRule::Axiom;
  Clause clause;          // unused for TopMark
  std::size_t ref1 = 0;   // Axiom: input clause index; Weakening/Cut: earlier step
  std::size_t ref2 = 0;   // Cut: second earlier step
  Var pivot = 0;          // Cut only

  static ProofStep axiom(std::size_t input_index, Clause c) {
    return {StepRule::Axiom, std::move(c), input_index, 0, 0};
  }
  static ProofStep weakening(std::size_t from, Clause c) {
    return {StepRule::Weakening, std::move(c), from, 0, 0};
  }
  static ProofStep cut(std::size_t i, std::size_t j, Var pivot, Clause c) {
    return {StepRule::Cut, std::move(c), i, j, pivot};
  }
  static ProofStep top() { return {StepRule::TopMark, Clause(), 0, 0, 0}; }
};

struct ResolutionProof {
  std::vector<ProofStep> steps;
  std::size_t size() const { return steps.size(); }
};

enum class ResolveOutcome { Resolved, Tautology, NotResolvable };

struct ResolveResult {
  ResolveOutcome outcome = ResolveOutcome::NotResolvable;
  Clause clause;  // meaningful iff Resolved
};

// Cut of c1 and c2 on `pivot`: requires the pivot to appear with opposite
// phases (either orientation); Tautology when the union carries another
// complementary pair.
ResolveResult resolve(const Clause& c1, const Clause& c2, Var pivot);

struct CheckResult {
  bool ok = true;
  std::size_t failed_step = 0;  // 0-based; valid iff !ok
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Validates every justification against phi and earlier steps; top markers
// carry no obligation but cannot be referenced.  With require_refutation
// the final step must be the (non-top) empty clause.
CheckResult check_proof(const Cnf& phi, const ResolutionProof& proof,
                        bool require_refutation);

// Restriction of a proof that checks against phi, for rho with
// restrict_cnf(phi, rho) not bottom.  The result checks against the
// restricted CNF; if the input was a refutation, so is the output.
ResolutionProof restrict_proof(const ResolutionProof& proof,
                               const PartialAssignment& rho, const Cnf& phi);

struct WeakeningFree {
  ResolutionProof proof;
  // For each original step index, the index of the replacement step whose
  // clause is a subclause of the original (SIZE_MAX for top markers).
  std::vector<std::size_t> step_map;
};

// Requires a refutation of phi; the result uses only Axiom and Cut.
WeakeningFree eliminate_weakening(const ResolutionProof& proof, const Cnf& phi);

// One step per line: "idx lits | rule refs", e.g. "3 -2 4 | cut 1 2 3".
std::string proof_to_text(const ResolutionProof& proof);

}  // namespace pacres
