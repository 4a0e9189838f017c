// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_STFT_HPP_
#define GEOPSE_STFT_HPP_

#include "geopse/common.hpp"
#include "geopse/frame.hpp"

namespace geopse {

// Forward STFT of a single channel: F x T complex, F = fft_len/2 + 1.
CMatF Stft(const VecF& wave, const FrameConfig& cfg);

// One spectrogram per channel of a multichannel wave.
SpecStackF StftMulti(const Wave& wave, const FrameConfig& cfg);

// Overlap-add synthesis with the same sqrt-Hann taper. Output length is
// (T-1)*hop + window_len. Interior samples reconstruct exactly under COLA;
// the first and last partial overlaps are normalized by the locally
// accumulated window energy.
VecF Istft(const CMatF& spec, const FrameConfig& cfg);

}  // namespace geopse

#endif  // GEOPSE_STFT_HPP_
