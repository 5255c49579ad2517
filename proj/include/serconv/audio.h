// serconv/audio.h

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

#ifndef SERCONV_AUDIO_H_
#define SERCONV_AUDIO_H_

#include <cstdint>
#include <string>
#include <vector>

namespace serconv {

constexpr int kPipelineSampleRate = 16000;

struct Waveform {
  std::vector<double> samples;
  int sample_rate = kPipelineSampleRate;

  int64_t NumSamples() const { return static_cast<int64_t>(samples.size()); }
  double DurationSec() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Reads a mono WAV file. Accepted codecs: 16-bit signed PCM (the external
// corpus format) and IEEE float 32/64 (used for never-requantized mixes).
// A sample rate other than 16 kHz raises UnsupportedRate; no resampling.
Waveform ReadWav(const std::string &path);

// 16-bit PCM writer; samples are clipped to [-1, 1) and scaled by 32767.
void WritePcm16Wav(const std::string &path, const Waveform &w);

// 64-bit IEEE float writer (WAVE format code 3). Round-trips doubles
// bit-exactly, so mixed utterances are never quantized.
void WriteFloat64Wav(const std::string &path, const Waveform &w);

}  // namespace serconv

#endif  // SERCONV_AUDIO_H_
