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

#ifndef QKDLAB_SUFFIX_ARRAY_HPP
#define QKDLAB_SUFFIX_ARRAY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <vector>

namespace qkdlab {

/// Suffix array by prefix doubling, O(n log^2 n).
inline std::vector<std::uint32_t> build_suffix_array(std::string_view text) {
    const std::uint32_t n = static_cast<std::uint32_t>(text.size());
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    if (n < 2) {
        return order;
    }
    std::vector<std::uint32_t> rank(n), next_rank(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        rank[i] = static_cast<unsigned char>(text[i]);
    }
    for (std::uint32_t span = 1;; span <<= 1) {
        auto less = [&](std::uint32_t a, std::uint32_t b) {
            if (rank[a] != rank[b]) {
                return rank[a] < rank[b];
            }
            const std::uint32_t ra = a + span < n ? rank[a + span] + 1 : 0;
            const std::uint32_t rb = b + span < n ? rank[b + span] + 1 : 0;
            return ra < rb;
        };
        std::sort(order.begin(), order.end(), less);
        next_rank[order[0]] = 0;
        for (std::uint32_t i = 1; i < n; ++i) {
            next_rank[order[i]] = next_rank[order[i - 1]] + (less(order[i - 1], order[i]) ? 1 : 0);
        }
        rank.swap(next_rank);
        if (rank[order[n - 1]] == n - 1 || span >= n) {
            break;
        }
    }
    return order;
}

/// Kasai LCP array: lcp[i] is the common-prefix length of the suffixes at
/// sa[i-1] and sa[i]; lcp[0] is 0.
inline std::vector<std::uint32_t> lcp_array(std::string_view text,
                                            const std::vector<std::uint32_t>& sa) {
    const std::uint32_t n = static_cast<std::uint32_t>(text.size());
    std::vector<std::uint32_t> lcp(n, 0), inverse(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        inverse[sa[i]] = i;
    }
    std::uint32_t h = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (inverse[i] == 0) {
            h = 0;
            continue;
        }
        const std::uint32_t j = sa[inverse[i] - 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) {
            ++h;
        }
        lcp[inverse[i]] = h;
        if (h > 0) {
            --h;
        }
    }
    return lcp;
}

/// Length of the longest substring occurring at least twice (overlapping
/// occurrences count). Equals the maximum adjacent-suffix LCP.
inline std::size_t longest_repeat_length(std::string_view text) {
    if (text.size() < 2) {
        return 0;
    }
    const std::vector<std::uint32_t> sa = build_suffix_array(text);
    const std::vector<std::uint32_t> lcp = lcp_array(text, sa);
    std::uint32_t best = 0;
    for (std::uint32_t v : lcp) {
        best = std::max(best, v);
    }
    return best;
}

} // namespace qkdlab

#endif // QKDLAB_SUFFIX_ARRAY_HPP
