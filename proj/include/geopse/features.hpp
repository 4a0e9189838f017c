// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_FEATURES_HPP_
#define GEOPSE_FEATURES_HPP_

#include <cmath>
#include <vector>

#include "geopse/common.hpp"

namespace geopse {

// Network-facing feature container. Channels are held as complex F x T
// maps; the documented external layout (real 2F x T, rows [0,F) carrying
// the real/cosine half and [F,2F) the imaginary/sine half) is produced by
// ToReal2F below. `fixed` layouts have one stream.
template <class S>
struct FeatureStreams {
  // streams[m][c] is an F x T complex map.
  std::vector<std::vector<CMat<S>>> streams;
  int F = 0;
  int T = 0;

  int NumStreams() const { return static_cast<int>(streams.size()); }
  int NumChannels() const {
    return streams.empty() ? 0 : static_cast<int>(streams[0].size());
  }
};

template <class S>
Mat<S> ToReal2F(const CMat<S>& chan) {
  Mat<S> out(2 * chan.rows(), chan.cols());
  out.topRows(chan.rows()) = chan.real();
  out.bottomRows(chan.rows()) = chan.imag();
  return out;
}

template <class S>
CMat<S> FoldComplex(const Mat<S>& real2f) {
  Require(real2f.rows() % 2 == 0, kBadConfig, "FoldComplex: odd row count");
  const Eigen::Index F = real2f.rows() / 2;
  CMat<S> out(F, real2f.cols());
  out.real() = real2f.topRows(F);
  out.imag() = real2f.bottomRows(F);
  return out;
}

// Y_v[f,t] = mean over streams of Y_i[f,t]. The per-element sum runs in
// ascending value order (real and imaginary parts independently), which
// makes the result bit-identical under any stream permutation.
template <class S>
CMat<S> VirtualMic(const SpecStack<S>& specs) {
  Require(!specs.empty(), kBadConfig, "VirtualMic: no streams");
  const int M = static_cast<int>(specs.size());
  if (M == 1) return specs[0];
  const Eigen::Index F = specs[0].rows(), T = specs[0].cols();
  for (const auto& s : specs) {
    Require(s.rows() == F && s.cols() == T, kBadConfig,
            "VirtualMic: stream shape mismatch");
  }
  CMat<S> out(F, T);
  S re[64], im[64];
  Require(M <= 64, kInternal, "VirtualMic: too many streams");
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    for (int m = 0; m < M; ++m) {
      re[m] = specs[m](i).real();
      im[m] = specs[m](i).imag();
    }
    out(i) = std::complex<S>(SortedMean(re, M), SortedMean(im, M));
  }
  return out;
}

// Wrapped inter-channel phase difference, angle(Y_i * conj(Y_j)) in
// (-pi, pi]. atan2 returns -pi for some inputs on the branch cut; those
// are mapped to +pi. Both operands zero gives 0.
template <class S>
Mat<S> Ipd(const CMat<S>& spec_i, const CMat<S>& spec_j) {
  Require(spec_i.rows() == spec_j.rows() && spec_i.cols() == spec_j.cols(),
          kBadConfig, "Ipd: shape mismatch");
  Mat<S> out(spec_i.rows(), spec_i.cols());
  const S pi = static_cast<S>(kPi);
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    const std::complex<S> p = spec_i(i) * std::conj(spec_j(i));
    if (p.real() == S(0) && p.imag() == S(0)) {
      out(i) = S(0);
      continue;
    }
    S a = std::atan2(p.imag(), p.real());
    if (a <= -pi) a = pi;
    out(i) = a;
  }
  return out;
}

// Unit phasor exp(j*Phi_{i,j}); carries cos/sin of the IPD as one complex
// channel. Zero-by-zero maps to phase 0, i.e. 1+0j.
template <class S>
CMat<S> IpdPhasor(const CMat<S>& spec_i, const CMat<S>& spec_j) {
  const Mat<S> phi = Ipd(spec_i, spec_j);
  CMat<S> out(phi.rows(), phi.cols());
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    out(i) = std::complex<S>(std::cos(phi(i)), std::sin(phi(i)));
  }
  return out;
}

// Stacked-STFT features: channel i is stream i's spectrogram.
template <class S>
FeatureStreams<S> AssembleFixedStft(const SpecStack<S>& specs) {
  Require(!specs.empty(), kBadConfig, "AssembleFixedStft: no streams");
  FeatureStreams<S> out;
  out.F = static_cast<int>(specs[0].rows());
  out.T = static_cast<int>(specs[0].cols());
  out.streams.resize(1);
  for (const auto& s : specs) out.streams[0].push_back(s);
  return out;
}

// Reference-mic IPD features: channel 0 is mic 1's spectrogram, channels
// 1..M-1 the IPD phasors of mics 2..M against mic 1.
template <class S>
FeatureStreams<S> AssembleFixedIpd(const SpecStack<S>& specs) {
  Require(specs.size() >= 2, kBadConfig, "AssembleFixedIpd: need M >= 2");
  FeatureStreams<S> out;
  out.F = static_cast<int>(specs[0].rows());
  out.T = static_cast<int>(specs[0].cols());
  out.streams.resize(1);
  out.streams[0].push_back(specs[0]);
  for (size_t k = 1; k < specs.size(); ++k) {
    out.streams[0].push_back(IpdPhasor(specs[0], specs[k]));
  }
  return out;
}

}  // namespace geopse

#endif  // GEOPSE_FEATURES_HPP_
