#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pacres/types.hpp"

// Witnessed evaluation, restriction, evaluation and clause enumeration.

namespace pacres {

enum class WitnessStatus { WitnessedTrue, WitnessedFalse, Undetermined };

// WitnessedTrue iff some literal is assigned and satisfied; WitnessedFalse
// iff every literal is assigned and falsified (so the empty clause is
// witnessed false on every rho).
WitnessStatus witness_status(const Clause& c, const PartialAssignment& rho);

RestrictedClause restrict_clause(const Clause& c, const PartialAssignment& rho);

struct RestrictedCnf {
  bool bottom = false;  // some clause witnessed false
  Cnf cnf;              // meaningful iff !bottom; clauses in original order
  // For each input clause: its position in cnf.clauses, or -1 when the
  // clause restricted to top.  Empty when bottom.
  std::vector<std::int32_t> clause_index;
};

RestrictedCnf restrict_cnf(const Cnf& phi, const PartialAssignment& rho);

bool evaluate_clause(const Clause& c, const Assignment& x);
bool evaluate(const Cnf& phi, const Assignment& x);

// Streams every non-tautological clause of width 1..w over variables 1..n
// exactly once, in canonical order.  The empty clause is not enumerated.
class ClauseEnumerator {
 public:
  // Requires 1 <= w <= n.
  ClauseEnumerator(Var n, unsigned w);
  std::optional<Clause> next();

  // sum_{k=1..w} C(n,k) 2^k; throws std::overflow_error past 2^63.
  static std::uint64_t count(Var n, unsigned w);

 private:
  Var n_;
  unsigned w_;
  unsigned k_ = 1;
  bool done_ = false;
  std::vector<Var> combo_;
  std::uint64_t mask_ = 0;
  bool fresh_combo_ = true;

  bool advance_combo();
};

std::vector<Clause> enumerate_clauses(Var n, unsigned w);

}  // namespace pacres
