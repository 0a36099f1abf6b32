#pragma once

#include <cstddef>
#include <random>

#include "sft/clopen.hpp"
#include "sft/matrix.hpp"
#include "sft/table_map.hpp"
#include "sft/word.hpp"

// Seeded generators for valid random objects. All randomness flows through
// the caller's engine.
namespace sft::random {

using Engine = std::mt19937_64;

/// Bernoulli(1/2) entries, resampled until the matrix is valid.
TransitionMatrix matrix(Engine& rng, std::size_t n);

/// Admissible word of exactly `len` symbols (uniform over followers).
Word word(Engine& rng, const TransitionMatrix& A, std::size_t len);

/// Union of a random subset of B_depth.
ClopenSet clopen(Engine& rng, const TransitionMatrix& A, std::size_t depth);

/// Nonempty variant: at least one cylinder of B_depth.
ClopenSet nonempty_clopen(Engine& rng, const TransitionMatrix& A, std::size_t depth);

/// Preperiod length <= max_pre, period length in [1, max_per].
EPPoint point(Engine& rng, const TransitionMatrix& A, std::size_t max_pre, std::size_t max_per);

/// A random element: repeated joint splits of a domain leaf and a
/// same-class image leaf, then a random re-pairing within classes. Domain
/// words stay within max_depth and image words within max_image.
TableMap table(Engine& rng, const TransitionMatrix& A, std::size_t max_depth, std::size_t max_image,
               std::size_t splits = 6);

}  // namespace sft::random
