/*
   Copyright 2026 The nomacast Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace nomacast {

/// Identifies one reproducible substream: a 64-bit seed (the Philox key)
/// plus a 64-bit stream id (the upper half of the Philox counter).
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

/// Philox4x32-10 block function. Exposed for known-answer testing.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Counter-based random stream.
///
/// Draw number n of stream (seed, id) is a pure function of (seed, id, n),
/// so realizations can be evaluated in any order on any number of threads.
/// All transforms below are written out explicitly instead of using
/// <random> distributions, whose algorithms are implementation-defined.
class RandomStream {
public:
    using result_type = std::uint64_t;

    explicit RandomStream(RngStream id);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform();

    /// Unit-mean exponential.
    double exponential();

    /// Standard normal (Box-Muller, one cached value).
    double normal();

    RngStream id() const { return id_; }

private:
    void refill();

    RngStream id_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int used_ = 4;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

} // namespace nomacast
