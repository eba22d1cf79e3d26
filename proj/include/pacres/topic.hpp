#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pacres/rational.hpp"
#include "pacres/rng.hpp"
#include "pacres/types.hpp"

// Pure-document topic model: a latent topic is drawn first, then every
// word in that topic's primary set plus the shared generic set is included
// independently with its word probability; all other words are absent.

namespace pacres {

struct Topic {
  Rational prob;
  std::vector<Var> primary;  // ascending, disjoint across topics
};

class TopicModel {
 public:
  // Validates: primary sets pairwise disjoint and disjoint from the
  // generic set, word probabilities in (0,1) for every used word, topic
  // probabilities in (0,1) summing to exactly 1.
  static TopicModel make(Var n, std::vector<Topic> topics,
                         std::vector<Var> generic,
                         std::vector<std::pair<Var, Rational>> word_probs);

  Var n() const { return n_; }
  const std::vector<Topic>& topics() const { return topics_; }
  const std::vector<Var>& generic() const { return generic_; }
  const std::optional<Rational>& word_prob(Var v) const { return word_prob_[v - 1]; }

  // Topic draw consumes one word; then one word per member of the topic's
  // word set in ascending index order.
  Assignment sample(Rng& rng) const;

  // Exact event probability by enumeration over (topic, word outcomes);
  // requires n <= 20.
  double event_probability(std::span<const Literal> event) const;

 private:
  Var n_ = 0;
  std::vector<Topic> topics_;
  std::vector<Var> generic_;
  std::vector<std::optional<Rational>> word_prob_;
  std::vector<std::vector<Var>> word_sets_;  // per topic: primary + generic, ascending
  std::vector<Rational> cumulative_;         // topic probability prefix sums
};

}  // namespace pacres
