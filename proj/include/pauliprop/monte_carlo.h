// Copyright 2026 The pauliprop Authors
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

#ifndef PAULIPROP_MONTE_CARLO_H
#define PAULIPROP_MONTE_CARLO_H

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

#include "pauliprop/rng.h"

namespace pauliprop {

struct SampleStats {
    uint64_t count = 0;
    double mean = 0;
    double stddev = 0;
    double min = 0;
    double max = 0;
};

namespace detail {

/// Sum of a stream of doubles as a balanced binary tree over blocks.
class PairwiseSum {
  public:
    void add(double x) {
        block_[fill_++] = x;
        if (fill_ == kBlock) {
            push(reduce(block_, kBlock));
            fill_ = 0;
        }
    }

    double total() const {
        double out = reduce(block_, fill_);
        for (size_t l = 0; l < levels_.size(); l++) {
            if (used_[l]) {
                out = levels_[l] + out;
            }
        }
        return out;
    }

  private:
    static constexpr size_t kBlock = 64;

    static double reduce(const double *xs, size_t n) {
        if (n == 0) {
            return 0;
        }
        if (n == 1) {
            return xs[0];
        }
        size_t half = n / 2;
        return reduce(xs, half) + reduce(xs + half, n - half);
    }

    void push(double x) {
        for (size_t l = 0;; l++) {
            if (l == levels_.size()) {
                levels_.push_back(0);
                used_.push_back(false);
            }
            if (!used_[l]) {
                levels_[l] = x;
                used_[l] = true;
                return;
            }
            x = levels_[l] + x;
            used_[l] = false;
        }
    }

    double block_[kBlock];
    size_t fill_ = 0;
    std::vector<double> levels_;
    std::vector<bool> used_;
};

struct WorkerStats {
    uint64_t count = 0;
    double mean = 0;
    double m2 = 0;
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
};

template <typename Draw>
WorkerStats run_worker(const Draw &draw, uint64_t count, Rng rng) {
    WorkerStats out;
    out.count = count;
    if (count == 0) {
        return out;
    }
    PairwiseSum s1;
    PairwiseSum s2;
    double shift = 0;
    for (uint64_t i = 0; i < count; i++) {
        double x = draw(rng);
        if (i == 0) {
            shift = x;
        }
        double d = x - shift;
        s1.add(d);
        s2.add(d * d);
        out.min = std::min(out.min, x);
        out.max = std::max(out.max, x);
    }
    double n = static_cast<double>(count);
    double t1 = s1.total();
    out.mean = shift + t1 / n;
    out.m2 = std::max(0.0, s2.total() - t1 * t1 / n);
    return out;
}

}  // namespace detail

/// Mean of n draws. Worker w draws from make_stream(seed, w) and the first
/// n % workers workers take one extra sample, so the result is bit-identical
/// for fixed (seed, workers, n). `draw` must be callable concurrently.
template <typename Draw>
SampleStats sample_mean(const Draw &draw, uint64_t n_samples, uint64_t seed, size_t workers) {
    workers = std::max<size_t>(workers, 1);
    std::vector<detail::WorkerStats> stats(workers);
    auto count_for = [&](size_t w) { return n_samples / workers + (w < n_samples % workers ? 1 : 0); };
    if (workers == 1) {
        stats[0] = detail::run_worker(draw, n_samples, make_stream(seed, 0));
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (size_t w = 0; w < workers; w++) {
            threads.emplace_back([&, w] { stats[w] = detail::run_worker(draw, count_for(w), make_stream(seed, w)); });
        }
        for (auto &t : threads) {
            t.join();
        }
    }

    SampleStats out;
    double n = 0;
    double mean = 0;
    double m2 = 0;
    out.min = std::numeric_limits<double>::infinity();
    out.max = -std::numeric_limits<double>::infinity();
    for (const detail::WorkerStats &s : stats) {
        if (s.count == 0) {
            continue;
        }
        double c = static_cast<double>(s.count);
        if (n == 0) {
            n = c;
            mean = s.mean;
            m2 = s.m2;
            out.min = s.min;
            out.max = s.max;
            continue;
        }
        double d = s.mean - mean;
        double total = n + c;
        mean += d * c / total;
        m2 += s.m2 + d * d * n * c / total;
        n = total;
        out.min = std::min(out.min, s.min);
        out.max = std::max(out.max, s.max);
    }
    out.count = n_samples;
    out.mean = mean;
    out.stddev = n > 1 ? std::sqrt(m2 / (n - 1)) : 0.0;
    return out;
}

}  // namespace pauliprop

#endif
