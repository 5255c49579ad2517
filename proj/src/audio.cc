// serconv/audio.cc

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

#include "serconv/audio.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "serconv/common.h"

namespace serconv {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatIeeeFloat = 3;

template <typename T>
T ReadLE(std::istream &is) {
  unsigned char buf[sizeof(T)];
  is.read(reinterpret_cast<char *>(buf), sizeof(T));
  uint64_t v = 0;
  for (size_t i = 0; i < sizeof(T); ++i) v |= static_cast<uint64_t>(buf[i]) << (8 * i);
  T out;
  std::memcpy(&out, &v, sizeof(T));
  return out;
}

template <typename T>
void WriteLE(std::ostream &os, T value) {
  uint64_t v = 0;
  std::memcpy(&v, &value, sizeof(T));
  unsigned char buf[sizeof(T)];
  for (size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char *>(buf), sizeof(T));
}

struct WavHeader {
  uint16_t format = 0;
  uint16_t channels = 0;
  uint32_t sample_rate = 0;
  uint16_t bits_per_sample = 0;
};

void WriteWavHeader(std::ostream &os, uint16_t format, uint16_t bits,
                    uint32_t sample_rate, uint32_t num_samples) {
  uint32_t bytes_per_sample = bits / 8;
  uint32_t data_bytes = num_samples * bytes_per_sample;
  os.write("RIFF", 4);
  WriteLE<uint32_t>(os, 36 + data_bytes);
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  WriteLE<uint32_t>(os, 16);
  WriteLE<uint16_t>(os, format);
  WriteLE<uint16_t>(os, 1);  // mono
  WriteLE<uint32_t>(os, sample_rate);
  WriteLE<uint32_t>(os, sample_rate * bytes_per_sample);
  WriteLE<uint16_t>(os, static_cast<uint16_t>(bytes_per_sample));
  WriteLE<uint16_t>(os, bits);
  os.write("data", 4);
  WriteLE<uint32_t>(os, data_bytes);
}

}  // namespace

Waveform ReadWav(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);

  char tag[4];
  is.read(tag, 4);
  if (!is || std::strncmp(tag, "RIFF", 4) != 0)
    throw UnsupportedFormat(path + ": not a RIFF file");
  ReadLE<uint32_t>(is);  // riff size, unused
  is.read(tag, 4);
  if (!is || std::strncmp(tag, "WAVE", 4) != 0)
    throw UnsupportedFormat(path + ": not a WAVE file");

  WavHeader hdr;
  Waveform w;
  bool have_fmt = false;
  while (is.read(tag, 4)) {
    uint32_t chunk_size = ReadLE<uint32_t>(is);
    if (std::strncmp(tag, "fmt ", 4) == 0) {
      hdr.format = ReadLE<uint16_t>(is);
      hdr.channels = ReadLE<uint16_t>(is);
      hdr.sample_rate = ReadLE<uint32_t>(is);
      ReadLE<uint32_t>(is);  // byte rate
      ReadLE<uint16_t>(is);  // block align
      hdr.bits_per_sample = ReadLE<uint16_t>(is);
      if (chunk_size > 16) is.seekg(chunk_size - 16, std::ios::cur);
      have_fmt = true;
    } else if (std::strncmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw UnsupportedFormat(path + ": data before fmt chunk");
      if (hdr.channels != 1)
        throw UnsupportedFormat(path + ": only mono supported");
      if (hdr.sample_rate != kPipelineSampleRate)
        throw UnsupportedRate(path + ": sample rate " +
                              std::to_string(hdr.sample_rate) +
                              ", pipeline requires 16000");
      if (hdr.format == kFormatPcm && hdr.bits_per_sample == 16) {
        uint32_t n = chunk_size / 2;
        w.samples.resize(n);
        for (uint32_t i = 0; i < n; ++i)
          w.samples[i] = ReadLE<int16_t>(is) / 32768.0;
      } else if (hdr.format == kFormatIeeeFloat && hdr.bits_per_sample == 32) {
        uint32_t n = chunk_size / 4;
        w.samples.resize(n);
        for (uint32_t i = 0; i < n; ++i) w.samples[i] = ReadLE<float>(is);
      } else if (hdr.format == kFormatIeeeFloat && hdr.bits_per_sample == 64) {
        uint32_t n = chunk_size / 8;
        w.samples.resize(n);
        for (uint32_t i = 0; i < n; ++i) w.samples[i] = ReadLE<double>(is);
      } else {
        throw UnsupportedFormat(path + ": format " + std::to_string(hdr.format) +
                                "/" + std::to_string(hdr.bits_per_sample) +
                                " bits not supported");
      }
      w.sample_rate = static_cast<int>(hdr.sample_rate);
      return w;
    } else {
      is.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }
  throw UnsupportedFormat(path + ": no data chunk");
}

void WritePcm16Wav(const std::string &path, const Waveform &w) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot write " + path);
  WriteWavHeader(os, kFormatPcm, 16, w.sample_rate,
                 static_cast<uint32_t>(w.samples.size()));
  for (double s : w.samples) {
    double clipped = std::min(1.0, std::max(-1.0, s));
    auto q = static_cast<int16_t>(std::lrint(clipped * 32767.0));
    WriteLE<int16_t>(os, q);
  }
  if (!os) throw IoError("short write to " + path);
}

void WriteFloat64Wav(const std::string &path, const Waveform &w) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot write " + path);
  WriteWavHeader(os, kFormatIeeeFloat, 64, w.sample_rate,
                 static_cast<uint32_t>(w.samples.size()));
  for (double s : w.samples) WriteLE<double>(os, s);
  if (!os) throw IoError("short write to " + path);
}

}  // namespace serconv
