// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_WAV_HPP_
#define GEOPSE_WAV_HPP_

#include <string>

#include "geopse/common.hpp"

namespace geopse {

enum class WavFormat { kS16, kF32 };

struct WavData {
  Wave samples;  // N x M, float in [-1, 1] nominal
  int sample_rate = 0;
};

// Reads a RIFF/WAVE file. Accepts PCM 16-bit and IEEE float 32-bit,
// mono or interleaved multichannel. Anything else is a kBadWav error.
WavData ReadWav(const std::string& path);

// As ReadWav but rejects files whose rate is not 16 kHz.
WavData ReadWav16k(const std::string& path);

void WriteWav(const std::string& path, const Wave& samples, int sample_rate,
              WavFormat format = WavFormat::kS16);

}  // namespace geopse

#endif  // GEOPSE_WAV_HPP_
