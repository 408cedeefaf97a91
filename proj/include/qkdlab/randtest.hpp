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

#ifndef QKDLAB_RANDTEST_HPP
#define QKDLAB_RANDTEST_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qkdlab/stats.hpp"
#include "qkdlab/suffix_array.hpp"

namespace qkdlab {

// Minimum sample lengths per test.
inline constexpr std::size_t kMinBitsMcv = 2;
inline constexpr std::size_t kMinBitsBinomial = 1;
inline constexpr std::size_t kMinBitsInd = 200;
inline constexpr std::size_t kMinBitsGof = 100;
inline constexpr std::size_t kMinBitsLrs = 1000;

/// A bitstring under assessment plus a free-text origin tag.
struct BitSample {
    std::string bits;
    std::string source_label;
};

namespace detail {

inline std::size_t count_ones(std::string_view bits, const char* what) {
    std::size_t ones = 0;
    for (char c : bits) {
        if (c == '1') {
            ++ones;
        } else if (c != '0') {
            throw std::invalid_argument(std::string(what) + ": bits must be '0'/'1'");
        }
    }
    return ones;
}

} // namespace detail

/// Most-common-value min-entropy estimate per bit, together with the 99%
/// upper confidence bound on the modal symbol probability it is based on:
/// p_upper = min(1, p_hat + 2.576 * sqrt(p_hat (1 - p_hat) / (L - 1))),
/// entropy = -log2(p_upper).
struct McvEstimate {
    double entropy_per_bit = 0.0;
    double p_upper = 1.0;
};

inline McvEstimate mcv_min_entropy(std::string_view bits) {
    const std::size_t length = bits.size();
    if (length < kMinBitsMcv) {
        throw std::invalid_argument("mcv_min_entropy: need at least 2 bits");
    }
    const std::size_t ones = detail::count_ones(bits, "mcv_min_entropy");
    const std::size_t modal = std::max(ones, length - ones);
    const double p_hat = static_cast<double>(modal) / static_cast<double>(length);
    const double bound =
        p_hat + 2.576 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(length - 1));
    const double p_upper = std::min(1.0, bound);
    const double entropy = std::clamp(-std::log2(p_upper), 0.0, 1.0);
    return {entropy, p_upper};
}

/// Two-sided exact binomial balance test against Binomial(L, 1/2):
/// p = min(1, 2 P(X >= max(k, L - k))), evaluated in log space.
inline double binomial_balance_p(std::string_view bits) {
    const std::uint64_t length = bits.size();
    if (length < kMinBitsBinomial) {
        throw std::invalid_argument("binomial_balance_p: empty input");
    }
    const std::uint64_t ones = detail::count_ones(bits, "binomial_balance_p");
    const std::uint64_t modal = std::max(ones, length - ones);
    return std::min(1.0, 2.0 * std::exp(log_binomial_upper_tail(length, modal)));
}

/// Chi-square style outcome. `degenerate` marks inputs whose expected cell
/// counts vanish (single-symbol data); the p-value is then pinned to 0.
struct ChiSquareOutcome {
    double p_value = 0.0;
    bool degenerate = false;
};

/// Independence test on non-overlapping adjacent bit pairs: observed pair
/// counts against expected N * p_a * p_b, chi-square with 1 degree of
/// freedom. Bits beyond the last whole pair are discarded.
inline ChiSquareOutcome ind_test_p(std::string_view bits) {
    const std::size_t length = bits.size();
    if (length < kMinBitsInd) {
        throw std::invalid_argument("ind_test_p: need at least 200 bits");
    }
    const std::size_t ones = detail::count_ones(bits, "ind_test_p");
    const double p1 = static_cast<double>(ones) / static_cast<double>(length);
    const double p0 = 1.0 - p1;
    if (ones == 0 || ones == length) {
        return {0.0, true};
    }
    const std::size_t pair_count = length / 2;
    std::array<std::size_t, 4> observed{0, 0, 0, 0};
    for (std::size_t i = 0; i < pair_count; ++i) {
        const std::size_t hi = bits[2 * i] == '1' ? 1u : 0u;
        const std::size_t lo = bits[2 * i + 1] == '1' ? 1u : 0u;
        ++observed[2 * hi + lo];
    }
    const std::array<double, 2> prob{p0, p1};
    double statistic = 0.0;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            const double expected = static_cast<double>(pair_count) * prob[a] * prob[b];
            const double diff = static_cast<double>(observed[2 * a + b]) - expected;
            statistic += diff * diff / expected;
        }
    }
    return {chi_square_upper_tail(statistic, 1), false};
}

/// Goodness-of-fit test: ones counts of 10 equal consecutive segments
/// against a shared expectation, chi-square with 9 degrees of freedom.
/// Bits beyond 10 * floor(L/10) are discarded; the ones proportion is
/// taken over the used bits.
inline ChiSquareOutcome gof_test_p(std::string_view bits) {
    const std::size_t length = bits.size();
    if (length < kMinBitsGof) {
        throw std::invalid_argument("gof_test_p: need at least 100 bits");
    }
    detail::count_ones(bits, "gof_test_p");
    const std::size_t segment = length / 10;
    const std::size_t used = segment * 10;
    std::array<std::size_t, 10> ones_per_segment{};
    std::size_t total_ones = 0;
    for (std::size_t d = 0; d < 10; ++d) {
        std::size_t count = 0;
        for (std::size_t i = d * segment; i < (d + 1) * segment; ++i) {
            count += bits[i] == '1' ? 1u : 0u;
        }
        ones_per_segment[d] = count;
        total_ones += count;
    }
    const double p1 = static_cast<double>(total_ones) / static_cast<double>(used);
    if (total_ones == 0 || total_ones == used) {
        return {0.0, true};
    }
    const double expected = p1 * static_cast<double>(segment);
    const double denom = expected * (1.0 - p1);
    double statistic = 0.0;
    for (std::size_t d = 0; d < 10; ++d) {
        const double diff = static_cast<double>(ones_per_segment[d]) - expected;
        statistic += diff * diff / denom;
    }
    return {chi_square_upper_tail(statistic, 9), false};
}

/// Collision probability that a repeat as long as `repeat_length` appears
/// somewhere in a sequence of `length` bits with symbol collision
/// probability p_col: 1 - (1 - p_col^W)^N over N = C(L - W + 1, 2)
/// candidate position pairs. Evaluated via expm1/log1p.
inline double lrs_collision_p(std::size_t length, std::size_t repeat_length, double p_col) {
    const double lw = static_cast<double>(length) - static_cast<double>(repeat_length) + 1.0;
    const double pairs = lw * (lw - 1.0) / 2.0;
    const double q = std::exp(static_cast<double>(repeat_length) * std::log(p_col));
    return -std::expm1(pairs * std::log1p(-q));
}

/// Longest-repeated-substring test: exact longest repeat via suffix array,
/// then the collision-probability tail above.
inline double lrs_test_p(std::string_view bits) {
    const std::size_t length = bits.size();
    if (length < kMinBitsLrs) {
        throw std::invalid_argument("lrs_test_p: need at least 1000 bits");
    }
    const std::size_t ones = detail::count_ones(bits, "lrs_test_p");
    const double p1 = static_cast<double>(ones) / static_cast<double>(length);
    const double p0 = 1.0 - p1;
    const double p_col = p0 * p0 + p1 * p1;
    const std::size_t repeat = longest_repeat_length(bits);
    return lrs_collision_p(length, repeat, p_col);
}

/// Pass cutoffs applied to the four p-values. The entropy estimate is
/// reported raw and carries no cutoff.
struct Thresholds {
    double binomial = 0.000005;
    double ind = 0.001;
    double gof = 0.001;
    double lrs = 0.001;
};

enum class Verdict { Pass, Fail, NotRun };

struct TestOutcome {
    double p_value = 0.0;
    Verdict verdict = Verdict::NotRun;
    bool degenerate = false;
};

/// Results of the full randomness screen of one bit sample.
struct ValidationReport {
    bool entropy_ran = false;
    double entropy_per_bit = 0.0;
    double mcv_p_upper = 1.0;
    TestOutcome binomial;
    TestOutcome ind;
    TestOutcome gof;
    TestOutcome lrs;
    Thresholds thresholds;

    /// True when no executed test failed its cutoff.
    bool all_pass() const {
        for (const TestOutcome* t : {&binomial, &ind, &gof, &lrs}) {
            if (t->verdict == Verdict::Fail) {
                return false;
            }
        }
        return true;
    }
};

/// Run every test whose length precondition the sample meets; the rest stay
/// NotRun. Verdict per test: p-value >= threshold.
inline ValidationReport validate(const BitSample& sample, const Thresholds& thresholds = {}) {
    if (sample.bits.empty()) {
        throw std::invalid_argument("validate: empty sample");
    }
    ValidationReport report;
    report.thresholds = thresholds;
    const std::string_view bits = sample.bits;
    const auto verdict_of = [](double p, double cutoff) {
        return p >= cutoff ? Verdict::Pass : Verdict::Fail;
    };

    if (bits.size() >= kMinBitsMcv) {
        const McvEstimate estimate = mcv_min_entropy(bits);
        report.entropy_ran = true;
        report.entropy_per_bit = estimate.entropy_per_bit;
        report.mcv_p_upper = estimate.p_upper;
    }
    report.binomial.p_value = binomial_balance_p(bits);
    report.binomial.verdict = verdict_of(report.binomial.p_value, thresholds.binomial);
    if (bits.size() >= kMinBitsInd) {
        const ChiSquareOutcome outcome = ind_test_p(bits);
        report.ind = {outcome.p_value, verdict_of(outcome.p_value, thresholds.ind),
                      outcome.degenerate};
    }
    if (bits.size() >= kMinBitsGof) {
        const ChiSquareOutcome outcome = gof_test_p(bits);
        report.gof = {outcome.p_value, verdict_of(outcome.p_value, thresholds.gof),
                      outcome.degenerate};
    }
    if (bits.size() >= kMinBitsLrs) {
        const double p = lrs_test_p(bits);
        report.lrs = {p, verdict_of(p, thresholds.lrs), false};
    }
    return report;
}

} // namespace qkdlab

#endif // QKDLAB_RANDTEST_HPP
