// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_DVECTOR_HPP_
#define GEOPSE_DVECTOR_HPP_

#include <string>

#include "geopse/common.hpp"

namespace geopse {

// Deterministic enrollment embedding. Not a trained speaker model: 40-band
// log-mel statistics over voice-active frames (per-frame mean across bands
// removed, so the embedding ignores input gain), mean+std pooled to 80
// dims, projected by a fixed seeded matrix to `dim` dims, L2-normalized.
// Real extractors plug in through the DVEC file interface below.
VecF DvectorStub(const VecF& enrollment, int sample_rate, int dim = 128);

// DVEC file: magic "DVEC", u32 dim, dim little-endian float32 values.
VecF ReadDvec(const std::string& path);
void WriteDvec(const std::string& path, const VecF& v);

}  // namespace geopse

#endif  // GEOPSE_DVECTOR_HPP_
