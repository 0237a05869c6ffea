#pragma once

#include <cstdint>

#include "dimred/dataset.hpp"

namespace dimred::synthetic {

/**
 * Three well-separated Gaussian blobs over `n_informative` columns plus
 * `n_noise` uniform columns. Columns are named info1.., noise1...
 */
Dataset blobs_with_noise(int n_per_blob, int n_informative, int n_noise, std::uint64_t seed);

/**
 * Ward-like table: 8 correlated deprivation scores on heterogeneous scales,
 * driven by a three-level latent deprivation factor. Column names match the
 * usual index-of-deprivation domains.
 */
Dataset london_style(int n_rows, std::uint64_t seed);

}  // namespace dimred::synthetic
