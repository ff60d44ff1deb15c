// Copyright 2026 The sparsto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Sums over distinct indices,
//
//   S(a)     = sum_j a_j
//   S(a,b)   = sum_{j != k} a_j b_k
//   S(a,b,c) = sum_{j,k,l pairwise distinct} a_j b_k c_l
//
// evaluated in O(n) from power sums, plus literal O(n^2) / O(n^3) loops that
// serve as oracles. Power sums are accumulated in long double with Neumaier
// compensation because the closed forms subtract nearly equal quantities.

#include <cmath>
#include <cstddef>
#include <string>

#include <Eigen/Core>

#include "sparsto/errors.hpp"

namespace sparsto::distinct {

/// Largest length accepted by triple_sum_brute.
inline constexpr std::size_t kBruteForceLimit = 2000;

template <typename Scalar>
using MomentVector = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/// Neumaier-compensated running sum.
template <typename T>
class CompensatedSum {
public:
    void add(T x) {
        const T t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    T value() const { return sum_ + compensation_; }

private:
    T sum_{0};
    T compensation_{0};
};

namespace detail {

using Wide = long double;

template <typename DA, typename DB>
void require_same_length(const Eigen::ArrayBase<DA>& a, const Eigen::ArrayBase<DB>& b) {
    if (a.size() != b.size()) {
        throw DomainError("distinct-index sum: length mismatch (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
    }
}

// sum_u a_u^ea * b_u^eb
template <typename DA, typename DB>
Wide mixed_power_sum(const Eigen::ArrayBase<DA>& a, int ea, const Eigen::ArrayBase<DB>& b,
                     int eb) {
    CompensatedSum<Wide> acc;
    for (Eigen::Index u = 0; u < a.size(); ++u) {
        Wide term = 1;
        for (int e = 0; e < ea; ++e) term *= static_cast<Wide>(a(u));
        for (int e = 0; e < eb; ++e) term *= static_cast<Wide>(b(u));
        acc.add(term);
    }
    return acc.value();
}

template <typename DA>
Wide power_sum(const Eigen::ArrayBase<DA>& a, int e) {
    return mixed_power_sum(a, e, a, 0);
}

}  // namespace detail

/// S(a) = sum_j a_j.
template <typename DA>
typename DA::Scalar sum(const Eigen::ArrayBase<DA>& a) {
    return static_cast<typename DA::Scalar>(detail::power_sum(a, 1));
}

/// S(a,b) = A1 B1 - C1.
template <typename DA, typename DB>
typename DA::Scalar pair_sum(const Eigen::ArrayBase<DA>& a, const Eigen::ArrayBase<DB>& b) {
    detail::require_same_length(a, b);
    const auto a1 = detail::power_sum(a, 1);
    const auto b1 = detail::power_sum(b, 1);
    const auto c1 = detail::mixed_power_sum(a, 1, b, 1);
    return static_cast<typename DA::Scalar>(a1 * b1 - c1);
}

/// S(a,b,b) = A1 (B1^2 - B2) - 2 C1 B1 + 2 C2.
template <typename DA, typename DB>
typename DA::Scalar triple_sum_abb(const Eigen::ArrayBase<DA>& a, const Eigen::ArrayBase<DB>& b) {
    detail::require_same_length(a, b);
    const auto a1 = detail::power_sum(a, 1);
    const auto b1 = detail::power_sum(b, 1);
    const auto b2 = detail::power_sum(b, 2);
    const auto c1 = detail::mixed_power_sum(a, 1, b, 1);
    const auto c2 = detail::mixed_power_sum(a, 1, b, 2);
    return static_cast<typename DA::Scalar>(a1 * (b1 * b1 - b2) - 2 * c1 * b1 + 2 * c2);
}

/// S(a,a,a) = A1^3 - 3 A2 A1 + 2 A3.
template <typename DA>
typename DA::Scalar triple_sum_aaa(const Eigen::ArrayBase<DA>& a) {
    const auto a1 = detail::power_sum(a, 1);
    const auto a2 = detail::power_sum(a, 2);
    const auto a3 = detail::power_sum(a, 3);
    return static_cast<typename DA::Scalar>(a1 * a1 * a1 - 3 * a2 * a1 + 2 * a3);
}

/// Literal double loop over ordered distinct pairs.
template <typename DA, typename DB>
typename DA::Scalar pair_sum_brute(const Eigen::ArrayBase<DA>& a, const Eigen::ArrayBase<DB>& b) {
    detail::require_same_length(a, b);
    CompensatedSum<detail::Wide> acc;
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        for (Eigen::Index k = 0; k < b.size(); ++k) {
            if (j != k) acc.add(static_cast<detail::Wide>(a(j)) * b(k));
        }
    }
    return static_cast<typename DA::Scalar>(acc.value());
}

/// Literal triple loop over ordered pairwise-distinct triples. O(n^3); throws
/// SizeGuardError above kBruteForceLimit.
template <typename DA, typename DB, typename DC>
typename DA::Scalar triple_sum_brute(const Eigen::ArrayBase<DA>& a, const Eigen::ArrayBase<DB>& b,
                                     const Eigen::ArrayBase<DC>& c) {
    detail::require_same_length(a, b);
    detail::require_same_length(a, c);
    if (static_cast<std::size_t>(a.size()) > kBruteForceLimit) {
        throw SizeGuardError("triple_sum_brute: length " + std::to_string(a.size()) +
                             " exceeds " + std::to_string(kBruteForceLimit));
    }
    CompensatedSum<detail::Wide> acc;
    const Eigen::Index n = a.size();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            if (k == j) continue;
            const detail::Wide ab = static_cast<detail::Wide>(a(j)) * b(k);
            for (Eigen::Index l = 0; l < n; ++l) {
                if (l == j || l == k) continue;
                acc.add(ab * c(l));
            }
        }
    }
    return static_cast<typename DA::Scalar>(acc.value());
}

}  // namespace sparsto::distinct
