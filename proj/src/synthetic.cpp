#include "dimred/synthetic.hpp"

#include <string>
#include <vector>

#include "dimred/error.hpp"
#include "dimred/rng.hpp"

namespace dimred::synthetic {

Dataset blobs_with_noise(int n_per_blob, int n_informative, int n_noise, std::uint64_t seed) {
    if (n_per_blob < 1 || n_informative < 1 || n_noise < 0) throw ParameterError("invalid generator sizes");
    constexpr int kBlobs = 3;
    const int n = kBlobs * n_per_blob;
    const int d = n_informative + n_noise;
    Rng rng(seed);

    Matrix values(n, d);
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) {
        const int blob = i % kBlobs;
        for (int c = 0; c < n_informative; ++c) {
            // each informative column places the blobs at 0, 5 and 10 in a column-specific order
            const double center = 5.0 * ((blob + c) % kBlobs);
            values(i, c) = center + 0.5 * rng.normal();
        }
        for (int c = 0; c < n_noise; ++c) values(i, n_informative + c) = rng.uniform(0.0, 10.0);
        ids.push_back("s" + std::to_string(i + 1));
    }
    std::vector<std::string> names;
    for (int c = 0; c < n_informative; ++c) names.push_back("info" + std::to_string(c + 1));
    for (int c = 0; c < n_noise; ++c) names.push_back("noise" + std::to_string(c + 1));
    return Dataset(std::move(ids), std::move(names), std::move(values));
}

Dataset london_style(int n_rows, std::uint64_t seed) {
    if (n_rows < 8) throw ParameterError("london_style needs at least 8 rows");
    Rng rng(seed);
    Matrix values(n_rows, 8);
    std::vector<std::string> ids;
    for (int i = 0; i < n_rows; ++i) {
        // latent deprivation: affluent / middle / deprived wards
        const int level = static_cast<int>(rng.below(3));
        const double dep = 0.2 + 0.3 * level + 0.06 * rng.normal();
        const double housing = rng.uniform();

        const double income = 0.02 + 0.35 * dep + 0.02 * rng.normal();
        const double employment = 0.01 + 0.25 * dep + 0.015 * rng.normal();
        const double health = -1.5 + 2.6 * dep + 0.15 * rng.normal();
        const double education = 2.0 + 40.0 * dep + 6.0 * rng.normal();
        const double barriers = 15.0 + 10.0 * dep + 12.0 * housing + 2.5 * rng.normal();
        const double crime = -1.0 + 2.0 * dep + 0.18 * rng.normal();
        const double living = 10.0 + 15.0 * dep + 14.0 * housing + 3.5 * rng.normal();
        const double imd = 100.0 * (0.225 * income + 0.225 * employment) + 4.0 * health + 0.3 * education +
                           0.2 * barriers + 3.0 * crime + 0.2 * living + 1.5 * rng.normal();

        values.row(i) << imd, income, employment, health, education, barriers, crime, living;
        ids.push_back("W" + std::to_string(100000 + i));
    }
    return Dataset(std::move(ids),
                   {"IMD Score", "Income Score", "Employment Score", "Health Score", "Education Score",
                    "Barriers Score", "Crime Score", "Living Score"},
                   std::move(values));
}

}  // namespace dimred::synthetic
