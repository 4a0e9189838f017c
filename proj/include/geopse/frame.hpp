// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_FRAME_HPP_
#define GEOPSE_FRAME_HPP_

#include <cmath>
#include <string>

#include "geopse/common.hpp"

namespace geopse {

// Analysis/synthesis framing. Frame t covers samples [t*hop, t*hop + window);
// there is no padding in front of the signal, so the framing is strictly
// causal and the first window_len - hop_len output samples of any
// analysis/synthesis round trip are a documented warm-up transient.
struct FrameConfig {
  int sample_rate_hz = kSampleRate;
  int window_len = 512;
  int hop_len = 256;
  int fft_len = 512;
  std::string window = "sqrt_hann";

  int Bins() const { return fft_len / 2 + 1; }

  void Validate() const {
    Require(window_len > 0 && hop_len > 0, kBadConfig, "frame sizes must be positive");
    Require(window_len % hop_len == 0, kBadConfig, "hop_len must divide window_len");
    Require(fft_len >= window_len, kBadConfig, "fft_len must be >= window_len");
    Require(window == "sqrt_hann", kBadConfig, "unknown window: " + window);
  }

  // floor((len - window) / hop) + 1
  int NumFrames(int64_t num_samples) const {
    Require(num_samples >= window_len, kBadConfig, "input too short");
    return static_cast<int>((num_samples - window_len) / hop_len) + 1;
  }

  int64_t NumSamples(int num_frames) const {
    return static_cast<int64_t>(num_frames - 1) * hop_len + window_len;
  }
};

// Periodic square-root Hann. With hop = window/2 the squared overlap-add
// sums to exactly 1, which is what makes the round trip an identity.
inline VecF SqrtHannWindow(int n) {
  VecF w(n);
  for (int i = 0; i < n; ++i) {
    double hann = 0.5 - 0.5 * std::cos(2.0 * kPi * i / n);
    w[i] = static_cast<float>(std::sqrt(hann));
  }
  return w;
}

inline FrameConfig ToyFrameConfig() {
  FrameConfig cfg;
  cfg.window_len = 256;
  cfg.hop_len = 128;
  cfg.fft_len = 256;
  return cfg;
}

inline FrameConfig TinyFrameConfig() {
  FrameConfig cfg;
  cfg.window_len = 128;
  cfg.hop_len = 64;
  cfg.fft_len = 128;
  return cfg;
}

}  // namespace geopse

#endif  // GEOPSE_FRAME_HPP_
