#include "pacres/logic.hpp"

#include <stdexcept>

namespace pacres {

WitnessStatus witness_status(const Clause& c, const PartialAssignment& rho) {
  bool all_false = true;
  for (const Literal& l : c.lits()) {
    if (l.var > rho.n()) throw std::out_of_range("witness_status: variable out of range");
    if (!rho.assigned(l.var)) {
      all_false = false;
      continue;
    }
    if (l.satisfied_by(rho.value(l.var))) return WitnessStatus::WitnessedTrue;
  }
  return all_false ? WitnessStatus::WitnessedFalse : WitnessStatus::Undetermined;
}

RestrictedClause restrict_clause(const Clause& c, const PartialAssignment& rho) {
  std::vector<Literal> kept;
  for (const Literal& l : c.lits()) {
    if (l.var > rho.n()) throw std::out_of_range("restrict_clause: variable out of range");
    if (!rho.assigned(l.var)) {
      kept.push_back(l);
    } else if (l.satisfied_by(rho.value(l.var))) {
      return {true, Clause()};
    }
  }
  // A subset of a non-tautological clause cannot be tautological.
  return {false, Clause::make(std::move(kept))};
}

RestrictedCnf restrict_cnf(const Cnf& phi, const PartialAssignment& rho) {
  RestrictedCnf out;
  out.cnf.n = phi.n;
  out.clause_index.reserve(phi.clauses.size());
  for (const Clause& c : phi.clauses) {
    if (witness_status(c, rho) == WitnessStatus::WitnessedFalse) {
      return {true, Cnf{{}, phi.n}, {}};
    }
    const RestrictedClause rc = restrict_clause(c, rho);
    if (rc.top) {
      out.clause_index.push_back(-1);
    } else {
      out.clause_index.push_back(static_cast<std::int32_t>(out.cnf.clauses.size()));
      out.cnf.clauses.push_back(rc.clause);
    }
  }
  return out;
}

bool evaluate_clause(const Clause& c, const Assignment& x) {
  for (const Literal& l : c.lits()) {
    if (l.var > x.size()) throw std::out_of_range("evaluate: variable out of range");
    if (l.satisfied_by(x[l.var - 1] != 0)) return true;
  }
  return false;
}

bool evaluate(const Cnf& phi, const Assignment& x) {
  for (const Clause& c : phi.clauses) {
    if (!evaluate_clause(c, x)) return false;
  }
  return true;
}

ClauseEnumerator::ClauseEnumerator(Var n, unsigned w) : n_(n), w_(w) {
  if (w < 1) throw std::invalid_argument("enumerate_clauses: width < 1");
  if (w > n) throw std::invalid_argument("enumerate_clauses: width exceeds variable count");
  combo_.resize(1);
  combo_[0] = 1;
}

bool ClauseEnumerator::advance_combo() {
  // Next k-combination of {1..n} in lexicographic order.
  unsigned k = k_;
  for (unsigned i = k; i-- > 0;) {
    if (combo_[i] < n_ - (k - 1 - i)) {
      ++combo_[i];
      for (unsigned j = i + 1; j < k; ++j) combo_[j] = combo_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<Clause> ClauseEnumerator::next() {
  if (done_) return std::nullopt;
  // Emit current (combo, mask).
  std::vector<Literal> lits;
  lits.reserve(k_);
  for (unsigned i = 0; i < k_; ++i) {
    lits.emplace_back(combo_[i], ((mask_ >> i) & 1ull) != 0);
  }
  Clause out = Clause::make(std::move(lits));

  // Advance: mask, then combination, then width.
  if (++mask_ >= (1ull << k_)) {
    mask_ = 0;
    if (!advance_combo()) {
      ++k_;
      if (k_ > w_) {
        done_ = true;
      } else {
        combo_.resize(k_);
        for (unsigned i = 0; i < k_; ++i) combo_[i] = i + 1;
      }
    }
  }
  return out;
}

std::uint64_t ClauseEnumerator::count(Var n, unsigned w) {
  if (w < 1 || w > n) throw std::invalid_argument("enumerate_clauses: bad width");
  std::uint64_t total = 0;
  for (unsigned k = 1; k <= w; ++k) {
    // C(n,k) * 2^k with overflow checks
    unsigned __int128 binom = 1;
    for (unsigned i = 0; i < k; ++i) {
      binom = binom * (n - i) / (i + 1);
    }
    const unsigned __int128 term = binom << k;
    if (term + total > (static_cast<unsigned __int128>(1) << 63)) {
      throw std::overflow_error("enumerate_clauses: count exceeds 2^63");
    }
    total += static_cast<std::uint64_t>(term);
  }
  return total;
}

std::vector<Clause> enumerate_clauses(Var n, unsigned w) {
  std::vector<Clause> out;
  out.reserve(ClauseEnumerator::count(n, w));
  ClauseEnumerator en(n, w);
  while (auto c = en.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace pacres
