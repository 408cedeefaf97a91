// Copyright 2026 The qkdlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QKDLAB_STATS_HPP
#define QKDLAB_STATS_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qkdlab {

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
/// Series expansion below the a+1 crossover, Lentz continued fraction above.
inline double regularized_gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0 || !std::isfinite(a) || !std::isfinite(x)) {
        throw std::invalid_argument("regularized_gamma_q: need a > 0 and finite x >= 0");
    }
    if (x == 0.0) {
        return 1.0;
    }
    const double log_prefactor = -x + a * std::log(x) - std::lgamma(a);
    if (x < a + 1.0) {
        // Q = 1 - P with P from the lower series.
        double term = 1.0 / a;
        double sum = term;
        double denom = a;
        for (int n = 0; n < 10000; ++n) {
            denom += 1.0;
            term *= x / denom;
            sum += term;
            if (std::fabs(term) < std::fabs(sum) * 1e-17) {
                break;
            }
        }
        return 1.0 - sum * std::exp(log_prefactor);
    }
    // Modified Lentz evaluation of the continued fraction for Q.
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::fabs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) {
            break;
        }
    }
    return std::exp(log_prefactor) * h;
}

/// P(chi-square with `df` degrees of freedom >= statistic).
inline double chi_square_upper_tail(double statistic, int df) {
    if (df < 1) {
        throw std::invalid_argument("chi_square_upper_tail: df must be >= 1");
    }
    if (statistic < 0.0) {
        return 1.0;
    }
    return regularized_gamma_q(static_cast<double>(df) / 2.0, statistic / 2.0);
}

/// ln P(X >= m) for X ~ Binomial(n, 1/2), valid for m >= n/2 (terms then
/// decrease monotonically, so the scaled sum is stable at any n).
inline double log_binomial_upper_tail(std::uint64_t n, std::uint64_t m) {
    if (m > n || 2 * m < n) {
        throw std::invalid_argument("log_binomial_upper_tail: need n/2 <= m <= n");
    }
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    const double log_top = std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) -
                           std::lgamma(nd - md + 1.0) - nd * std::log(2.0);
    double scaled_sum = 1.0;
    double term = 1.0;
    for (std::uint64_t j = m; j < n; ++j) {
        term *= static_cast<double>(n - j) / static_cast<double>(j + 1);
        scaled_sum += term;
        if (term < scaled_sum * 1e-18) {
            break;
        }
    }
    return log_top + std::log(scaled_sum);
}

} // namespace qkdlab

#endif // QKDLAB_STATS_HPP
