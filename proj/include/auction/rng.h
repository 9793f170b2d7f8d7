// Copyright 2026 The Auction Mechanisms Authors.
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

#ifndef AUCTION_RNG_H_
#define AUCTION_RNG_H_

#include <cstdint>
#include <random>

namespace auction {

// Deterministic generator used by every stochastic routine.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the C++
// standard. Seeding goes through std::seed_seq (also fully specified) so a
// 64-bit seed maps to the same stream on every conforming platform:
//   Rng(seed)            -> seed_seq{lo32(seed), hi32(seed)}
//   Rng::stream(seed, k) -> seed_seq{lo32(seed), hi32(seed), lo32(k), hi32(k), 0x5eed}
// Replication k always draws from stream(seed, k), so its values do not
// depend on how many replications run or on which worker runs them.
//
// Reals and bounded integers are derived from raw 64-bit outputs here rather
// than through <random> distributions, whose algorithms are unspecified.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

  // Uniform on [lo, hi) for lo < hi.
  double uniform_real(double lo, double hi);

  // Uniform integer on the closed range [lo, hi]; rejection sampling, no bias.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  explicit Rng(std::seed_seq& seq) : engine_(seq) {}
  std::mt19937_64 engine_;
};

}  // namespace auction

#endif  // AUCTION_RNG_H_
