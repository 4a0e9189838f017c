// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "geopse/stft.hpp"

#include <unsupported/Eigen/FFT>

#include <vector>

namespace geopse {

CMatF Stft(const VecF& wave, const FrameConfig& cfg) {
  cfg.Validate();
  const int T = cfg.NumFrames(wave.size());
  const int F = cfg.Bins();
  const VecF win = SqrtHannWindow(cfg.window_len);

  Eigen::FFT<float> fft;
  fft.SetFlag(Eigen::FFT<float>::HalfSpectrum);

  CMatF spec(F, T);
  std::vector<float> frame(cfg.fft_len, 0.0f);
  std::vector<std::complex<float>> bins;
  for (int t = 0; t < T; ++t) {
    const int64_t off = static_cast<int64_t>(t) * cfg.hop_len;
    for (int i = 0; i < cfg.window_len; ++i) {
      frame[i] = wave[off + i] * win[i];
    }
    fft.fwd(bins, frame);
    for (int f = 0; f < F; ++f) spec(f, t) = bins[f];
  }
  return spec;
}

SpecStackF StftMulti(const Wave& wave, const FrameConfig& cfg) {
  SpecStackF out;
  out.reserve(wave.cols());
  for (Eigen::Index c = 0; c < wave.cols(); ++c) {
    out.push_back(Stft(VecF(wave.col(c)), cfg));
  }
  return out;
}

VecF Istft(const CMatF& spec, const FrameConfig& cfg) {
  cfg.Validate();
  Require(spec.rows() == cfg.Bins(), kBadConfig,
          "spectrogram bin count does not match fft_len");
  const int T = static_cast<int>(spec.cols());
  const int F = cfg.Bins();
  const int64_t out_len = cfg.NumSamples(T);
  const VecF win = SqrtHannWindow(cfg.window_len);

  Eigen::FFT<float> fft;
  fft.SetFlag(Eigen::FFT<float>::HalfSpectrum);

  VecF out = VecF::Zero(out_len);
  VecF norm = VecF::Zero(out_len);
  std::vector<std::complex<float>> bins(F);
  std::vector<float> frame;
  for (int t = 0; t < T; ++t) {
    for (int f = 0; f < F; ++f) bins[f] = spec(f, t);
    fft.inv(frame, bins);  // length fft_len, already scaled by 1/fft_len
    const int64_t off = static_cast<int64_t>(t) * cfg.hop_len;
    for (int i = 0; i < cfg.window_len; ++i) {
      out[off + i] += frame[i] * win[i];
      norm[off + i] += win[i] * win[i];
    }
  }
  for (int64_t i = 0; i < out_len; ++i) {
    out[i] /= std::max(norm[i], 1e-8f);
  }
  return out;
}

}  // namespace geopse
