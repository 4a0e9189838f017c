// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_ROOM_HPP_
#define GEOPSE_ROOM_HPP_

#include <Eigen/Dense>

#include "geopse/common.hpp"

namespace geopse {

struct RoomSpec {
  Eigen::Vector3d dims;  // meters
  double t60 = 0.3;      // seconds
  double speed_of_sound = kSpeedOfSound;
  // Cap on image indices per axis; -1 picks the count that covers the full
  // RIR length (the only setting that reproduces long decays faithfully),
  // 0 is free field.
  int max_image_order = -1;

  void Validate() const {
    Require(t60 >= 0.05 && t60 <= 2.0, kBadConfig, "t60 out of [0.05, 2.0] s");
    for (int i = 0; i < 3; ++i) {
      Require(dims[i] >= 2.0 && dims[i] <= 15.0, kBadConfig,
              "room dimension out of [2, 15] m");
    }
  }
};

struct AbsorptionResult {
  double alpha = 0.0;
  bool clamped = false;
};

// Sabine inversion, uniform over all six surfaces:
//   alpha = 0.161 * V / (S * T60), clamped to (0, 0.99].
AbsorptionResult T60ToAbsorption(const Eigen::Vector3d& dims, double t60);

// Allen-Berkley image method, uniform reflection coefficient
// beta = sqrt(1 - alpha). Each image contributes
// beta^(#reflections) / (4 pi dist) through an 8-tap Hann-windowed-sinc
// fractional delay. RIR length is ceil(1.2 * T60 * fs) samples (at least
// enough for the direct path).
VecF ImageMethodRir(const RoomSpec& room, const Eigen::Vector3d& src,
                    const Eigen::Vector3d& mic, int fs);

// Reverberation time from backward-integrated energy decay (Schroeder),
// fitted between -5 and -25 dB.
double SchroederT60(const VecF& rir, int fs);

}  // namespace geopse

#endif  // GEOPSE_ROOM_HPP_
