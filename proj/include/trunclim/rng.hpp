/*
   Copyright 2026 The trunclim Authors

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

#ifndef TRUNCLIM_RNG_HPP_
#define TRUNCLIM_RNG_HPP_

#include <array>
#include <cstdint>

namespace trunclim {

// SplitMix64 (Steele, Lea & Flood); used to expand seeds into generator
// state and to mix stream indices into independent substream seeds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// xoshiro256++ (Blackman & Vigna), period 2^256 - 1. One instance per
// substream; state is expanded from the substream seed with SplitMix64.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : state_) word = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on the open interval (0,1); never hits an endpoint, so quantile
  // transforms stay finite.
  double next_open01() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
};

// Stateless counter-based split: every (master, a, b) triple yields an
// independent substream seed, so draws and replications are reproducible
// irrespective of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0) {
  SplitMix64 sm(master);
  std::uint64_t h = sm.next();
  h ^= 0x9e3779b97f4a7c15ULL + a + (h << 6) + (h >> 2);
  SplitMix64 sm2(h);
  h = sm2.next();
  h ^= 0x9e3779b97f4a7c15ULL + b + (h << 6) + (h >> 2);
  SplitMix64 sm3(h);
  return sm3.next();
}

}  // namespace trunclim

#endif  // TRUNCLIM_RNG_HPP_
