// serconv/rng.cc

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

#include "serconv/rng.h"

#include <cmath>
#include <sstream>

namespace serconv {

uint64_t Rng::UniformInt(uint64_t n) {
  if (n == 0) return 0;
  uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return x % n;
}

double Rng::Normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1, u2;
  do {
    u1 = Uniform();
  } while (u1 <= 0.0);
  u2 = Uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

uint64_t Rng::DeriveSeed(uint64_t seed, uint64_t index) {
  // splitmix64 finalizer over seed XOR index; decorrelates nearby indices.
  uint64_t z = seed ^ (index + 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<uint64_t> Rng::SaveState() const {
  // The textual representation of mt19937_64 is specified by the standard:
  // 312 state words followed by the stream position.
  std::ostringstream os;
  os << eng_;
  std::vector<uint64_t> words;
  std::istringstream is(os.str());
  uint64_t w;
  while (is >> w) words.push_back(w);
  return words;
}

void Rng::LoadState(const std::vector<uint64_t> &words) {
  std::ostringstream os;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) os << ' ';
    os << words[i];
  }
  std::istringstream is(os.str());
  is >> eng_;
  have_spare_ = false;
  spare_ = 0.0;
}

}  // namespace serconv
