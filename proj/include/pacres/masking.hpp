#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pacres/rational.hpp"
#include "pacres/rng.hpp"
#include "pacres/source.hpp"
#include "pacres/types.hpp"

// Independent masking: each coordinate of a sample is revealed with
// probability mu, independently, and hidden (*) otherwise.

namespace pacres {

struct MaskedSampleSet {
  Var n = 0;
  std::size_t m = 0;
  Rational mu;
  std::string mu_text;  // as written in the file header
  std::uint64_t seed = 0;
  std::string provenance;  // optional src= token
  std::vector<PartialAssignment> samples;
};

// Each coordinate consumes one stream word, in ascending index order,
// whether or not it is revealed.  Requires mu in [0,1].
PartialAssignment mask_independent(const Assignment& x, const Rational& mu,
                                   Rng& rng);

// Re-masking a partial row: coordinates that are already * stay *;
// assigned coordinates are kept with probability mu.  Same consumption
// contract as above.
PartialAssignment mask_partial(const PartialAssignment& rho, const Rational& mu,
                               Rng& rng);

// m independent draws from the source, each masked independently.  The
// sampler uses the Sampling stream of `seed` and the masker the Masking
// stream, so runs with different mu share underlying assignments.
MaskedSampleSet draw_masked_samples(const DistributionSource& source,
                                    const Rational& mu, std::size_t m,
                                    std::uint64_t seed);

// As above but also returns the underlying full assignments (test use).
struct MaskedSampleSetDebug {
  MaskedSampleSet set;
  std::vector<Assignment> underlying;
};
MaskedSampleSetDebug draw_masked_samples_debug(const DistributionSource& source,
                                               const Rational& mu, std::size_t m,
                                               std::uint64_t seed);

}  // namespace pacres
