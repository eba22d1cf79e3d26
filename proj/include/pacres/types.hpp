#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

// Literals, clauses, CNFs and partial assignments.
//
// A Clause is a set of literals over variables 1..n with at most one
// literal per variable: duplicate literals are collapsed on construction
// and a complementary pair is rejected, so tautologies are unrepresentable
// and clause identity is structural.  The width-0 clause is the empty
// clause (falsum).  A PartialAssignment is an element of {0,1,*}^n; it is
// consistent with a full assignment x when every non-* entry agrees with x.

namespace pacres {

using Var = std::uint32_t;  // 1-based

// Full assignment; entries are 0/1.
using Assignment = std::vector<std::uint8_t>;

struct Literal {
  Var var = 0;
  bool positive = true;

  Literal() = default;
  Literal(Var v, bool pos) : var(v), positive(pos) {}
  // DIMACS-style: +v / -v.
  static Literal from_dimacs(int code) {
    return Literal(static_cast<Var>(code < 0 ? -code : code), code > 0);
  }
  int to_dimacs() const { return positive ? static_cast<int>(var) : -static_cast<int>(var); }

  Literal negated() const { return Literal(var, !positive); }
  // Dense index in 0..2n-1; negative phase first.
  std::size_t index() const { return 2 * (var - 1) + (positive ? 1 : 0); }
  bool satisfied_by(bool value) const { return value == positive; }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.var == b.var && a.positive == b.positive;
  }
  friend bool operator<(const Literal& a, const Literal& b) {
    if (a.var != b.var) return a.var < b.var;
    return a.positive < b.positive;  // negative first
  }
};

class Clause {
 public:
  Clause() = default;  // empty clause

  // Sorts and collapses duplicates; nullopt when a complementary pair is
  // present (a tautology, which has no Clause representation).
  static std::optional<Clause> try_make(std::vector<Literal> lits);
  // Convenience for fixtures; throws std::invalid_argument on a tautology.
  static Clause make(std::vector<Literal> lits);
  static Clause make_dimacs(std::initializer_list<int> codes);

  std::size_t width() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  const std::vector<Literal>& lits() const { return lits_; }
  Var max_var() const { return lits_.empty() ? 0 : lits_.back().var; }

  bool contains(const Literal& l) const;
  bool has_var(Var v) const;
  // Polarity of v if present.
  std::optional<bool> phase(Var v) const;
  bool subset_of(const Clause& o) const;
  // Removes the literal on v if present.
  Clause without_var(Var v) const;

  std::string to_string() const;

  friend bool operator==(const Clause& a, const Clause& b) {
    return a.lits_ == b.lits_;
  }
  friend bool operator!=(const Clause& a, const Clause& b) {
    return !(a == b);
  }

 private:
  std::vector<Literal> lits_;  // sorted by (var, phase), unique vars
};

// Enumeration/worklist order: ascending width, then lexicographic on the
// sorted variable tuple, then the polarity bitmask read with bit k for the
// k-th smallest variable (negative = 0, so e.g. (~x1) before (x1)).
bool canonical_less(const Clause& a, const Clause& b);

struct Cnf {
  std::vector<Clause> clauses;
  Var n = 0;

  std::size_t size() const { return clauses.size(); }
  bool well_formed() const;
};

enum class Trit : std::uint8_t { False = 0, True = 1, Star = 2 };

class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(Var n) : e_(n, Trit::Star) {}
  explicit PartialAssignment(std::vector<Trit> entries) : e_(std::move(entries)) {}
  // From a row like "1*0"; nullopt on other characters.
  static std::optional<PartialAssignment> from_string(std::string_view row);

  Var n() const { return static_cast<Var>(e_.size()); }
  Trit at(Var v) const { return e_[v - 1]; }  // 1-based
  void set(Var v, Trit t) { e_[v - 1] = t; }
  bool assigned(Var v) const { return e_[v - 1] != Trit::Star; }
  bool value(Var v) const { return e_[v - 1] == Trit::True; }
  std::size_t star_count() const;

  bool consistent_with(const Assignment& x) const;
  std::string to_string() const;

  friend bool operator==(const PartialAssignment& a, const PartialAssignment& b) {
    return a.e_ == b.e_;
  }

 private:
  std::vector<Trit> e_;
};

// Restriction of a single clause: top when witnessed true, otherwise the
// literals on *-positions (possibly the empty clause).
struct RestrictedClause {
  bool top = false;
  Clause clause;  // meaningful iff !top
};

}  // namespace pacres
