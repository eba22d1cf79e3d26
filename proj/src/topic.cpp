#include "pacres/topic.hpp"

#include <algorithm>
#include <stdexcept>

namespace pacres {

TopicModel TopicModel::make(Var n, std::vector<Topic> topics,
                            std::vector<Var> generic,
                            std::vector<std::pair<Var, Rational>> word_probs) {
  TopicModel m;
  m.n_ = n;
  std::sort(generic.begin(), generic.end());
  m.generic_ = generic;
  m.word_prob_.resize(n);

  std::vector<bool> used(n + 1, false);
  const auto claim = [&](Var v) {
    if (v < 1 || v > n) throw std::invalid_argument("topic model: index out of range");
    if (used[v]) throw std::invalid_argument("topic model: word sets not disjoint");
    used[v] = true;
  };
  for (Var v : generic) claim(v);
  for (Topic& t : topics) {
    std::sort(t.primary.begin(), t.primary.end());
    for (Var v : t.primary) claim(v);
  }

  for (const auto& [v, p] : word_probs) {
    if (v < 1 || v > n) throw std::invalid_argument("topic model: word prob index out of range");
    if (p.is_zero() || p > Rational::one())
      throw std::invalid_argument("topic model: word probability outside (0,1]");
    m.word_prob_[v - 1] = p;
  }

  Rational sum = Rational::zero();
  for (const Topic& t : topics) {
    if (t.prob.is_zero() || t.prob > Rational::one())
      throw std::invalid_argument("topic model: topic probability outside (0,1]");
    const auto s = sum.checked_add(t.prob);
    if (!s) throw std::invalid_argument("topic model: probability overflow");
    sum = *s;
    m.cumulative_.push_back(sum);
  }
  if (sum != Rational::one())
    throw std::invalid_argument("topic model: topic probabilities must sum to 1");

  for (const Topic& t : topics) {
    std::vector<Var> ws = t.primary;
    ws.insert(ws.end(), generic.begin(), generic.end());
    std::sort(ws.begin(), ws.end());
    for (Var v : ws) {
      if (!m.word_prob_[v - 1])
        throw std::invalid_argument("topic model: missing word probability");
    }
    m.word_sets_.push_back(std::move(ws));
  }
  m.topics_ = std::move(topics);
  return m;
}

Assignment TopicModel::sample(Rng& rng) const {
  const std::uint64_t u = rng.next_u53();
  std::size_t t = topics_.size() - 1;
  for (std::size_t i = 0; i < cumulative_.size(); ++i) {
    const Rational& c = cumulative_[i];
    if (static_cast<unsigned __int128>(u) * c.den <
        (static_cast<unsigned __int128>(c.num)) << 53) {
      t = i;
      break;
    }
  }
  Assignment x(n_, 0);
  for (Var v : word_sets_[t]) {
    if (rng.bernoulli(*word_prob_[v - 1])) x[v - 1] = 1;
  }
  return x;
}

double TopicModel::event_probability(std::span<const Literal> event) const {
  if (n_ > 20) throw std::length_error("topic enumeration: n > 20");
  double total = 0.0;
  for (std::size_t t = 0; t < topics_.size(); ++t) {
    const std::vector<Var>& ws = word_sets_[t];
    // Words outside the topic set are 0; a positive literal there kills
    // every outcome of this topic.
    bool impossible = false;
    for (const Literal& l : event) {
      if (l.positive && !std::binary_search(ws.begin(), ws.end(), l.var)) {
        impossible = true;
        break;
      }
    }
    if (impossible) continue;

    double mass = 0.0;
    const std::uint64_t outcomes = 1ull << ws.size();
    for (std::uint64_t code = 0; code < outcomes; ++code) {
      double p = 1.0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const double wp = word_prob_[ws[i] - 1]->to_double();
        p *= ((code >> i) & 1ull) ? wp : (1.0 - wp);
      }
      bool ok = true;
      for (const Literal& l : event) {
        const auto it = std::lower_bound(ws.begin(), ws.end(), l.var);
        const bool value =
            (it != ws.end() && *it == l.var)
                ? (((code >> (it - ws.begin())) & 1ull) != 0)
                : false;
        if (value != l.positive) {
          ok = false;
          break;
        }
      }
      if (ok) mass += p;
    }
    total += topics_[t].prob.to_double() * mass;
  }
  return total;
}

}  // namespace pacres
