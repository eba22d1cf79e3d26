#include "pacres/source.hpp"

#include <stdexcept>

namespace pacres {

std::string UniformSource::describe() const {
  return "uniform n=" + std::to_string(n_);
}

Assignment UniformSource::sample(Rng& rng) const {
  Assignment x(n_);
  for (Var v = 0; v < n_; ++v) x[v] = rng.next_bit() ? 1 : 0;
  return x;
}

double UniformSource::event_probability(std::span<const Literal> event) const {
  return event_probability_exact(event)->to_double();
}

std::optional<Rational> UniformSource::event_probability_exact(
    std::span<const Literal> event) const {
  // Distinct variables are independent fair bits; an inconsistent
  // conjunction cannot be represented (duplicate vars are the caller's
  // responsibility to avoid, as with Clause).
  std::vector<Var> seen;
  for (const Literal& l : event) {
    if (l.var < 1 || l.var > n_) throw std::out_of_range("event: variable out of range");
    for (Var v : seen) {
      if (v == l.var) throw std::invalid_argument("event: duplicate variable");
    }
    seen.push_back(l.var);
  }
  if (event.size() >= 64) return Rational::zero();
  return Rational::dyadic(static_cast<unsigned>(event.size()));
}

std::uint64_t UniformSource::support_size() const {
  if (n_ > 22) throw std::length_error("uniform enumeration: n > 22");
  return 1ull << n_;
}

void UniformSource::for_each_support_point(
    const std::function<void(const Assignment&)>& fn) const {
  const std::uint64_t total = support_size();
  Assignment x(n_, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (Var v = 0; v < n_; ++v) x[v] = (code >> v) & 1u;
    fn(x);
  }
}

std::string AffineSource::describe() const {
  return "affine n=" + std::to_string(sys_.n()) +
         " rank=" + std::to_string(sys_.rank());
}

std::uint64_t AffineSource::support_size() const {
  if (sys_.free_count() > 22) throw std::length_error("affine enumeration: > 2^22 solutions");
  return 1ull << sys_.free_count();
}

std::string TopicSource::describe() const {
  return "topic n=" + std::to_string(model_.n()) +
         " topics=" + std::to_string(model_.topics().size());
}

std::uint64_t TopicSource::support_size() const {
  if (model_.n() > 22) throw std::length_error("topic enumeration: n > 22");
  return 1ull << model_.n();
}

void TopicSource::for_each_support_point(
    const std::function<void(const Assignment&)>& fn) const {
  const std::uint64_t total = support_size();
  Assignment x(model_.n(), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (Var v = 0; v < model_.n(); ++v) x[v] = (code >> v) & 1u;
    fn(x);
  }
}

}  // namespace pacres
