#include "pacres/masking.hpp"

#include <stdexcept>

namespace pacres {

PartialAssignment mask_independent(const Assignment& x, const Rational& mu,
                                   Rng& rng) {
  if (mu > Rational::one()) throw std::invalid_argument("mask: mu outside [0,1]");
  PartialAssignment rho(static_cast<Var>(x.size()));
  for (Var v = 1; v <= x.size(); ++v) {
    if (rng.bernoulli(mu)) {
      rho.set(v, x[v - 1] ? Trit::True : Trit::False);
    }
  }
  return rho;
}

PartialAssignment mask_partial(const PartialAssignment& in, const Rational& mu,
                               Rng& rng) {
  if (mu > Rational::one()) throw std::invalid_argument("mask: mu outside [0,1]");
  PartialAssignment rho(in.n());
  for (Var v = 1; v <= in.n(); ++v) {
    const bool keep = rng.bernoulli(mu);
    if (keep && in.assigned(v)) rho.set(v, in.at(v));
  }
  return rho;
}

MaskedSampleSet draw_masked_samples(const DistributionSource& source,
                                    const Rational& mu, std::size_t m,
                                    std::uint64_t seed) {
  return draw_masked_samples_debug(source, mu, m, seed).set;
}

MaskedSampleSetDebug draw_masked_samples_debug(const DistributionSource& source,
                                               const Rational& mu, std::size_t m,
                                               std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("draw_masked_samples: m < 1");
  MaskedSampleSetDebug out;
  out.set.n = source.n();
  out.set.m = m;
  out.set.mu = mu;
  out.set.mu_text = mu.to_string();
  out.set.seed = seed;
  out.set.provenance = source.describe().substr(0, source.describe().find(' '));
  out.set.samples.reserve(m);
  out.underlying.reserve(m);

  Rng sample_rng(seed, StreamTag::Sampling);
  Rng mask_rng(seed, StreamTag::Masking);
  for (std::size_t i = 0; i < m; ++i) {
    Assignment x = source.sample(sample_rng);
    out.set.samples.push_back(mask_independent(x, mu, mask_rng));
    out.underlying.push_back(std::move(x));
  }
  return out;
}

}  // namespace pacres
