#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "pacres/f2.hpp"
#include "pacres/topic.hpp"

// One sampler interface over the uniform distribution, affine
// distributions and topic models.  Sources with exact-probability
// capability answer event (conjunction-of-literals) queries; affine and
// uniform sources do so with exact dyadic rationals.

namespace pacres {

class DistributionSource {
 public:
  virtual ~DistributionSource() = default;

  virtual Var n() const = 0;
  virtual std::string describe() const = 0;
  virtual Assignment sample(Rng& rng) const = 0;

  virtual bool exact_capable() const = 0;
  // Exact probability of a conjunction of literals; requires exact_capable.
  virtual double event_probability(std::span<const Literal> event) const = 0;
  // Exact rational form when the source supports it (affine, uniform).
  virtual std::optional<Rational> event_probability_exact(
      std::span<const Literal> event) const {
    (void)event;
    return std::nullopt;
  }

  // Support enumeration for the brute-force oracles.  points() is the
  // support size (uniform weights); guarded at 2^22.
  virtual std::uint64_t support_size() const = 0;
  virtual void for_each_support_point(
      const std::function<void(const Assignment&)>& fn) const = 0;
  // False for sources whose support points are not equally weighted.
  virtual bool uniform_support() const = 0;
};

class UniformSource final : public DistributionSource {
 public:
  explicit UniformSource(Var n) : n_(n) {}
  Var n() const override { return n_; }
  std::string describe() const override;
  Assignment sample(Rng& rng) const override;
  bool exact_capable() const override { return true; }
  double event_probability(std::span<const Literal> event) const override;
  std::optional<Rational> event_probability_exact(
      std::span<const Literal> event) const override;
  std::uint64_t support_size() const override;
  void for_each_support_point(
      const std::function<void(const Assignment&)>& fn) const override;
  bool uniform_support() const override { return true; }

 private:
  Var n_;
};

class AffineSource final : public DistributionSource {
 public:
  explicit AffineSource(AffineSystem system) : sys_(std::move(system)) {}
  const AffineSystem& system() const { return sys_; }
  Var n() const override { return sys_.n(); }
  std::string describe() const override;
  Assignment sample(Rng& rng) const override { return sys_.sample(rng); }
  bool exact_capable() const override { return true; }
  double event_probability(std::span<const Literal> event) const override {
    return sys_.event_probability(event).to_double();
  }
  std::optional<Rational> event_probability_exact(
      std::span<const Literal> event) const override {
    return sys_.event_probability(event);
  }
  std::uint64_t support_size() const override;
  void for_each_support_point(
      const std::function<void(const Assignment&)>& fn) const override {
    sys_.for_each_solution(fn);
  }
  bool uniform_support() const override { return true; }

 private:
  AffineSystem sys_;
};

class TopicSource final : public DistributionSource {
 public:
  explicit TopicSource(TopicModel model) : model_(std::move(model)) {}
  const TopicModel& model() const { return model_; }
  Var n() const override { return model_.n(); }
  std::string describe() const override;
  Assignment sample(Rng& rng) const override { return model_.sample(rng); }
  bool exact_capable() const override { return model_.n() <= 20; }
  double event_probability(std::span<const Literal> event) const override {
    return model_.event_probability(event);
  }
  std::uint64_t support_size() const override;
  void for_each_support_point(
      const std::function<void(const Assignment&)>& fn) const override;
  bool uniform_support() const override { return false; }

 private:
  TopicModel model_;
};

}  // namespace pacres
