// serconv/rng.h

// Copyright 2026  The serconv authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SERCONV_RNG_H_
#define SERCONV_RNG_H_

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace serconv {

// Deterministic RNG: mt19937_64 engine (bit-exact by the C++ standard) with
// our own distribution helpers, so draws are reproducible across platforms
// and standard-library implementations. Every stochastic step in the
// pipeline (augmentation draws, weight init, shuffles, dropout) goes through
// this class.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t NextU64() { return eng_(); }

  // Uniform in [0, 1) with 53 random mantissa bits.
  double Uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, n), unbiased (rejection sampling).
  uint64_t UniformInt(uint64_t n);

  // Standard normal via Box-Muller on our own uniforms.
  double Normal();

  template <typename T>
  void Shuffle(std::vector<T> *v) {
    for (size_t i = v->size(); i > 1; --i) {
      size_t j = static_cast<size_t>(UniformInt(i));
      std::swap((*v)[i - 1], (*v)[j]);
    }
  }

  // Derive an independent stream for a work item, e.g. one utterance of an
  // augmentation batch (seed XOR mixed item index).
  static uint64_t DeriveSeed(uint64_t seed, uint64_t index);

  // Engine state round-trip; mt19937_64 has 312 words plus a position.
  std::vector<uint64_t> SaveState() const;
  void LoadState(const std::vector<uint64_t> &words);

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace serconv

#endif  // SERCONV_RNG_H_
