#include "pacres/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace pacres {

std::optional<Clause> Clause::try_make(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  std::vector<Literal> out;
  out.reserve(lits.size());
  for (const Literal& l : lits) {
    if (l.var == 0) throw std::invalid_argument("clause: variable index 0");
    if (!out.empty() && out.back().var == l.var) {
      if (out.back().positive == l.positive) continue;  // duplicate
      return std::nullopt;                              // complementary pair
    }
    out.push_back(l);
  }
  Clause c;
  c.lits_ = std::move(out);
  return c;
}

Clause Clause::make(std::vector<Literal> lits) {
  auto c = try_make(std::move(lits));
  if (!c) throw std::invalid_argument("clause: tautology");
  return *c;
}

Clause Clause::make_dimacs(std::initializer_list<int> codes) {
  std::vector<Literal> lits;
  lits.reserve(codes.size());
  for (int c : codes) lits.push_back(Literal::from_dimacs(c));
  return make(std::move(lits));
}

bool Clause::contains(const Literal& l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::has_var(Var v) const { return phase(v).has_value(); }

std::optional<bool> Clause::phase(Var v) const {
  auto it = std::lower_bound(lits_.begin(), lits_.end(), Literal(v, false));
  if (it != lits_.end() && it->var == v) return it->positive;
  return std::nullopt;
}

bool Clause::subset_of(const Clause& o) const {
  return std::includes(o.lits_.begin(), o.lits_.end(), lits_.begin(),
                       lits_.end());
}

Clause Clause::without_var(Var v) const {
  Clause c;
  c.lits_.reserve(lits_.size());
  for (const Literal& l : lits_) {
    if (l.var != v) c.lits_.push_back(l);
  }
  return c;
}

std::string Clause::to_string() const {
  if (lits_.empty()) return "()";
  std::string s = "(";
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(lits_[i].to_dimacs());
  }
  s += ")";
  return s;
}

bool canonical_less(const Clause& a, const Clause& b) {
  if (a.width() != b.width()) return a.width() < b.width();
  const auto& la = a.lits();
  const auto& lb = b.lits();
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i].var != lb[i].var) return la[i].var < lb[i].var;
  }
  // Polarity bitmask, bit i for the i-th smallest variable: numeric order,
  // so the highest differing position decides.
  for (std::size_t i = la.size(); i-- > 0;) {
    if (la[i].positive != lb[i].positive) return lb[i].positive;
  }
  return false;
}

bool Cnf::well_formed() const {
  for (const Clause& c : clauses) {
    if (c.max_var() > n) return false;
  }
  return true;
}

std::optional<PartialAssignment> PartialAssignment::from_string(
    std::string_view row) {
  std::vector<Trit> e;
  e.reserve(row.size());
  for (char c : row) {
    switch (c) {
      case '0': e.push_back(Trit::False); break;
      case '1': e.push_back(Trit::True); break;
      case '*': e.push_back(Trit::Star); break;
      default: return std::nullopt;
    }
  }
  return PartialAssignment(std::move(e));
}

std::size_t PartialAssignment::star_count() const {
  std::size_t k = 0;
  for (Trit t : e_) k += (t == Trit::Star);
  return k;
}

bool PartialAssignment::consistent_with(const Assignment& x) const {
  if (x.size() != e_.size()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != Trit::Star && static_cast<std::uint8_t>(e_[i]) != x[i])
      return false;
  }
  return true;
}

std::string PartialAssignment::to_string() const {
  std::string s;
  s.reserve(e_.size());
  for (Trit t : e_) {
    s += (t == Trit::Star ? '*' : (t == Trit::True ? '1' : '0'));
  }
  return s;
}

}  // namespace pacres
