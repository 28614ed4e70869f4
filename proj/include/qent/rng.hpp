// Copyright 2026 The qent Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <random>

namespace qent {

/// Philox4x32-10 block function (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Counter-based random stream.
///
/// The 128-bit Philox counter is laid out as (block, substream, stream_lo,
/// stream_hi), so distinct (stream_id, substream) pairs address disjoint
/// regions of the same keyed sequence. Each substream holds 2^33 outputs.
/// Satisfies UniformRandomBitGenerator, so the <random> distributions work
/// directly on it.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0,
                     std::uint32_t substream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1]; safe as a log argument.
  double uniform_open0();
  double normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  std::uint32_t substream_id() const { return substream_; }

  /// Fresh stream sharing seed and stream id, at another substream.
  RngStream substream(std::uint32_t index) const { return RngStream(seed_, stream_id_, index); }
  /// Fresh stream sharing the seed, at another stream id.
  RngStream with_stream(std::uint64_t stream_id) const { return RngStream(seed_, stream_id); }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint32_t substream_;
  std::uint32_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int cursor_ = 4;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qent
