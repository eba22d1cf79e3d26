#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pacres/bitvec.hpp"
#include "pacres/rational.hpp"
#include "pacres/rng.hpp"
#include "pacres/types.hpp"

// Affine distributions: uniform over the solutions of a solvable linear
// system Ax=b over F2.  Rows are bit-packed; elimination and the
// rank-comparison queries run on the kernel layer.

namespace pacres {

struct AffineRow {
  BitVec coeffs;  // length n
  bool rhs = false;
};

struct RrefResult {
  std::vector<AffineRow> rows;  // reduced row-echelon form, pivots ascending
  bool solvable = true;         // false iff a 0 = 1 row appeared
  std::size_t rank = 0;         // coefficient-matrix rank
  std::vector<Var> pivot_cols;  // ascending
  std::vector<Var> free_cols;   // ascending
};

RrefResult rref_f2(std::span<const AffineRow> rows, Var n);

class AffineSystem {
 public:
  // Throws std::invalid_argument when the system is unsolvable.
  static AffineSystem make(std::vector<AffineRow> rows, Var n);
  // Convenience for tests: each row is a list of 1-based indices plus rhs.
  static AffineSystem make_rows(
      Var n, const std::vector<std::pair<std::vector<Var>, bool>>& rows);

  Var n() const { return n_; }
  const std::vector<AffineRow>& raw_rows() const { return raw_; }
  const RrefResult& rref() const { return rref_; }
  std::size_t rank() const { return rref_.rank; }
  // log2 of the solution count.
  unsigned free_count() const { return static_cast<unsigned>(n_ - rref_.rank); }

  // Uniform solution; free variables consume one stream word each, in
  // ascending index order.
  Assignment sample(Rng& rng) const;

  // Exact probability of a conjunction of literals (dyadic); 0 when the
  // event is inconsistent with the system.  The empty event has mass 1.
  Rational event_probability(std::span<const Literal> event) const;

  // True iff some nonzero combination of rows is supported entirely on the
  // variables of c; equivalently the row rank drops when the columns of c
  // are removed.
  bool has_constraint_on(const Clause& c) const;

  // Enumerates all solutions; requires free_count() <= 22 (checked).
  void for_each_solution(const std::function<void(const Assignment&)>& fn) const;

 private:
  AffineSystem(Var n, std::vector<AffineRow> raw, RrefResult rref)
      : n_(n), raw_(std::move(raw)), rref_(std::move(rref)) {}

  Assignment complete_from_free(const std::vector<std::uint8_t>& free_bits) const;

  Var n_ = 0;
  std::vector<AffineRow> raw_;
  RrefResult rref_;
};

}  // namespace pacres
