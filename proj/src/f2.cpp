#include "pacres/f2.hpp"

#include <stdexcept>

namespace pacres {

RrefResult rref_f2(std::span<const AffineRow> rows, Var n) {
  std::vector<AffineRow> work(rows.begin(), rows.end());
  for (const AffineRow& r : work) {
    if (r.coeffs.size() != n) throw std::invalid_argument("rref_f2: row width mismatch");
  }

  RrefResult out;
  std::size_t next = 0;  // rows [0, next) hold pivots
  for (Var col = 0; col < n && next < work.size(); ++col) {
    std::size_t pivot = next;
    while (pivot < work.size() && !work[pivot].coeffs.get(col)) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[next], work[pivot]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r != next && work[r].coeffs.get(col)) {
        work[r].coeffs.xor_with(work[next].coeffs);
        work[r].rhs ^= work[next].rhs;
      }
    }
    out.pivot_cols.push_back(col + 1);
    ++next;
  }
  out.rank = next;
  for (std::size_t r = next; r < work.size(); ++r) {
    if (work[r].rhs) out.solvable = false;  // 0 = 1
  }
  work.resize(next);
  out.rows = std::move(work);

  std::size_t p = 0;
  for (Var v = 1; v <= n; ++v) {
    if (p < out.pivot_cols.size() && out.pivot_cols[p] == v) {
      ++p;
    } else {
      out.free_cols.push_back(v);
    }
  }
  return out;
}

AffineSystem AffineSystem::make(std::vector<AffineRow> rows, Var n) {
  RrefResult r = rref_f2(rows, n);
  if (!r.solvable) throw std::invalid_argument("affine system: unsolvable");
  return AffineSystem(n, std::move(rows), std::move(r));
}

AffineSystem AffineSystem::make_rows(
    Var n, const std::vector<std::pair<std::vector<Var>, bool>>& rows) {
  std::vector<AffineRow> packed;
  packed.reserve(rows.size());
  for (const auto& [vars, rhs] : rows) {
    AffineRow row{BitVec(n), rhs};
    for (Var v : vars) {
      if (v < 1 || v > n) throw std::invalid_argument("affine row: index out of range");
      row.coeffs.set(v - 1, !row.coeffs.get(v - 1));  // repeated index cancels
    }
    packed.push_back(std::move(row));
  }
  return make(std::move(packed), n);
}

Assignment AffineSystem::complete_from_free(
    const std::vector<std::uint8_t>& free_bits) const {
  Assignment x(n_, 0);
  for (std::size_t i = 0; i < rref_.free_cols.size(); ++i) {
    x[rref_.free_cols[i] - 1] = free_bits[i];
  }
  for (std::size_t r = 0; r < rref_.rows.size(); ++r) {
    const Var pivot = rref_.pivot_cols[r];
    bool v = rref_.rows[r].rhs;
    for (Var f : rref_.free_cols) {
      if (rref_.rows[r].coeffs.get(f - 1)) v ^= (x[f - 1] != 0);
    }
    x[pivot - 1] = v ? 1 : 0;
  }
  return x;
}

Assignment AffineSystem::sample(Rng& rng) const {
  std::vector<std::uint8_t> free_bits(rref_.free_cols.size());
  for (std::size_t i = 0; i < free_bits.size(); ++i) {
    free_bits[i] = rng.next_bit() ? 1 : 0;
  }
  return complete_from_free(free_bits);
}

Rational AffineSystem::event_probability(std::span<const Literal> event) const {
  // Augment the reduced system with one row x_i = b per literal and
  // re-reduce; the event mass is 2^-(rank' - rank), or 0 when the
  // augmented system is unsolvable.
  std::vector<AffineRow> rows = rref_.rows;
  for (const Literal& l : event) {
    if (l.var < 1 || l.var > n_) throw std::out_of_range("event: variable out of range");
    AffineRow row{BitVec(n_), l.positive};
    row.coeffs.set(l.var - 1, true);
    rows.push_back(std::move(row));
  }
  const RrefResult aug = rref_f2(rows, n_);
  if (!aug.solvable) return Rational::zero();
  return Rational::dyadic(static_cast<unsigned>(aug.rank - rref_.rank));
}

bool AffineSystem::has_constraint_on(const Clause& c) const {
  // Rank of the column submatrix outside c's variables: a drop means some
  // row combination vanishes there, i.e. is supported on c.
  std::vector<AffineRow> masked = rref_.rows;
  for (AffineRow& row : masked) {
    for (const Literal& l : c.lits()) {
      if (l.var <= n_) row.coeffs.set(l.var - 1, false);
    }
    row.rhs = false;
  }
  const RrefResult sub = rref_f2(masked, n_);
  return sub.rank < rref_.rank;
}

void AffineSystem::for_each_solution(
    const std::function<void(const Assignment&)>& fn) const {
  const unsigned f = free_count();
  if (f > 22) throw std::length_error("affine enumeration: more than 2^22 solutions");
  std::vector<std::uint8_t> free_bits(rref_.free_cols.size(), 0);
  const std::uint64_t total = 1ull << f;
  for (std::uint64_t code = 0; code < total; ++code) {
    for (unsigned i = 0; i < f; ++i) free_bits[i] = (code >> i) & 1u;
    fn(complete_from_free(free_bits));
  }
}

}  // namespace pacres
