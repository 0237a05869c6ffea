#pragma once

// Brute-force reference implementations. These deliberately share no code
// with the library paths they check.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

namespace oracle {

using Points = std::vector<std::vector<double>>;

inline double euclid(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

/// Direct evaluation of a(i), b(i), s(i); singleton clusters score 0.
inline std::vector<double> silhouette(const Points& x, const std::vector<int>& labels) {
    const std::size_t n = x.size();
    const int k = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<double> s(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double own_sum = 0.0;
        int own_count = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && labels[j] == labels[i]) {
                own_sum += euclid(x[i], x[j]);
                ++own_count;
            }
        }
        if (own_count == 0) continue;
        const double a = own_sum / own_count;
        double b = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
            if (c == labels[i]) continue;
            double sum = 0.0;
            int count = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (labels[j] == c) {
                    sum += euclid(x[i], x[j]);
                    ++count;
                }
            }
            if (count > 0) b = std::min(b, sum / count);
        }
        const double m = std::max(a, b);
        s[i] = m > 0.0 ? (b - a) / m : 0.0;
    }
    return s;
}

/// Minimum k-means objective for 1-D data and k = 2, by trying all 2^n assignments.
struct Exhaustive1D {
    double inertia;
    double c0;
    double c1;
};

inline Exhaustive1D exhaustive_two_means(const std::vector<double>& x) {
    const std::size_t n = x.size();
    Exhaustive1D best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        double s0 = 0, s1 = 0;
        int n0 = 0, n1 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) { s1 += x[i]; ++n1; } else { s0 += x[i]; ++n0; }
        }
        const double m0 = s0 / n0, m1 = s1 / n1;
        double j = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double m = (mask & (1u << i)) ? m1 : m0;
            j += (x[i] - m) * (x[i] - m);
        }
        if (j < best.inertia) best = {j, std::min(m0, m1), std::max(m0, m1)};
    }
    return best;
}

/// Number of subsets of an n-set with at least two elements, by walking the power set.
inline long long power_set_count(int n) {
    long long count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int bits = 0;
        for (int i = 0; i < n; ++i) bits += (mask >> i) & 1u;
        if (bits >= 2) ++count;
    }
    return count;
}

/// Eigenvalues of a symmetric 2x2 matrix, descending, from the characteristic quadratic.
inline std::array<double, 2> eig2(double a, double b, double d) {
    const double tr = a + d;
    const double det = a * d - b * b;
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    return {tr / 2.0 + disc, tr / 2.0 - disc};
}

/// Eigenvalues of a symmetric 3x3 matrix, descending, from the characteristic cubic (trigonometric roots).
inline std::array<double, 3> eig3(const std::array<std::array<double, 3>, 3>& m) {
    const double p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
    const double q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
    if (p1 == 0.0) {
        std::array<double, 3> e{m[0][0], m[1][1], m[2][2]};
        std::sort(e.begin(), e.end(), std::greater<>());
        return e;
    }
    const double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) + (m[2][2] - q) * (m[2][2] - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    std::array<std::array<double, 3>, 3> b{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
    const double det_b = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                         b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                         b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double r = std::clamp(det_b / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    return {e1, e2, e3};
}

}  // namespace oracle
