// Copyright 2026 The LocusGP Authors
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

#ifndef LOCUSGP_RNG_H_
#define LOCUSGP_RNG_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>

namespace locusgp {

// Deterministic random source. Every helper consumes exactly one 64-bit draw
// from the underlying engine, so call sequences are reproducible across
// platforms and standard libraries.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(Mix(seed)) {}

  // An independent stream for (seed, stream), e.g. one per offspring slot.
  static Rng ForStream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(Mix(seed) ^ Mix(stream + 0x632be59bd9b4e019ULL));
  }

  static constexpr result_type min() { return std::numeric_limits<result_type>::min(); }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n); n must be positive.
  std::size_t Below(std::size_t n) {
    auto product = static_cast<unsigned __int128>(engine_()) * n;
    return static_cast<std::size_t>(product >> 64);
  }

  // Uniform in [lo, hi].
  std::int64_t Range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(Below(static_cast<std::size_t>(hi - lo) + 1));
  }

  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  // splitmix64 finalizer.
  static std::uint64_t Mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace locusgp

#endif  // LOCUSGP_RNG_H_
