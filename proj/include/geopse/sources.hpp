// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_SOURCES_HPP_
#define GEOPSE_SOURCES_HPP_

#include <cstdint>
#include <string>

#include "geopse/common.hpp"

namespace geopse {

// Synthetic speech: a glottal pulse train driven through three time-varying
// formant resonators, interleaved with fricative-like noise segments and
// pauses. Deterministic in (voice_seed, utt_seed); voice_seed fixes the
// speaker (pitch, formant scale, rate), utt_seed the segment sequence.
// Output RMS is normalized to 0.1.
VecF SynthSpeech(uint64_t voice_seed, uint64_t utt_seed, double seconds,
                 int fs);

enum class NoiseKind { kWhite, kPink, kSpeechShaped, kBursts };

NoiseKind NoiseKindFromString(const std::string& s);
std::string ToString(NoiseKind k);

// Deterministic noise, RMS-normalized to 0.1.
VecF SynthNoise(NoiseKind kind, uint64_t seed, double seconds, int fs);

// Full linear convolution, length x + h - 1.
VecF Convolve(const VecF& x, const VecF& h);

}  // namespace geopse

#endif  // GEOPSE_SOURCES_HPP_
