// serconv/common.h

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

#ifndef SERCONV_COMMON_H_
#define SERCONV_COMMON_H_

#include <stdexcept>
#include <string>

namespace serconv {

// Base of every error this library raises on its documented failure paths.
// The `kind()` string is stable and machine-readable; the CLI prints it as
// "ERROR: <kind>: <message>".
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string &msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string &kind() const { return kind_; }

 private:
  std::string kind_;
};

#define SERCONV_DEFINE_ERROR(NAME)                        \
  class NAME : public Error {                             \
   public:                                                \
    explicit NAME(const std::string &msg)                 \
        : Error(#NAME, msg) {}                            \
  }

SERCONV_DEFINE_ERROR(EmptySignal);
SERCONV_DEFINE_ERROR(UnsupportedRate);
SERCONV_DEFINE_ERROR(UnsupportedFormat);
SERCONV_DEFINE_ERROR(BadBandEdges);
SERCONV_DEFINE_ERROR(BadOrder);
SERCONV_DEFINE_ERROR(CannotComputeSNR);
SERCONV_DEFINE_ERROR(PoolTooSmall);
SERCONV_DEFINE_ERROR(GeometryError);
SERCONV_DEFINE_ERROR(SpecError);
SERCONV_DEFINE_ERROR(ShapeError);
SERCONV_DEFINE_ERROR(StaleCache);
SERCONV_DEFINE_ERROR(PartitionError);
SERCONV_DEFINE_ERROR(MetricError);
SERCONV_DEFINE_ERROR(DivergedError);
SERCONV_DEFINE_ERROR(ProbeError);
SERCONV_DEFINE_ERROR(LDAError);
SERCONV_DEFINE_ERROR(ConfigError);
SERCONV_DEFINE_ERROR(IoError);

#undef SERCONV_DEFINE_ERROR

}  // namespace serconv

#endif  // SERCONV_COMMON_H_
