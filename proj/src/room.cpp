// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "geopse/room.hpp"

#include <cmath>
#include <vector>

namespace geopse {

AbsorptionResult T60ToAbsorption(const Eigen::Vector3d& dims, double t60) {
  Require(t60 > 0.0, kBadConfig, "t60 must be positive");
  const double V = dims.x() * dims.y() * dims.z();
  const double S = 2.0 * (dims.x() * dims.y() + dims.x() * dims.z() +
                          dims.y() * dims.z());
  AbsorptionResult res;
  res.alpha = 0.161 * V / (S * t60);
  if (res.alpha > 0.99) {
    res.alpha = 0.99;
    res.clamped = true;
  }
  return res;
}

namespace {

// Adds one image arrival: amplitude * 8-tap windowed sinc centered on the
// fractional delay. Tap k sits at sample floor(delay) - 3 + k; at those
// offsets sinc(x) reduces to (-1)^k sin(pi f) / (pi x) with f the
// fractional part, so only a handful of trig calls are needed per image.
void AddArrival(double delay_samples, double amplitude, VecF& rir) {
  const int n0 = static_cast<int>(std::floor(delay_samples));
  const double f = delay_samples - n0;
  const int len = static_cast<int>(rir.size());
  const double sin_pf = std::sin(kPi * f);
  for (int k = 0; k < 8; ++k) {
    const int idx = n0 - 3 + k;
    if (idx < 0 || idx >= len) continue;
    const double x = k - 3 - f;  // tap offset from the true delay
    double sinc;
    if (std::abs(x) < 1e-9) {
      sinc = 1.0;
    } else {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      sinc = sign * sin_pf / (kPi * x);
    }
    const double win = 0.5 * (1.0 + std::cos(2.0 * kPi * x / 8.0));
    rir[idx] += static_cast<float>(amplitude * sinc * win);
  }
}

}  // namespace

VecF ImageMethodRir(const RoomSpec& room, const Eigen::Vector3d& src,
                    const Eigen::Vector3d& mic, int fs) {
  room.Validate();
  for (int i = 0; i < 3; ++i) {
    Require(src[i] > 0.0 && src[i] < room.dims[i], kBadConfig,
            "source outside room");
    Require(mic[i] > 0.0 && mic[i] < room.dims[i], kBadConfig,
            "microphone outside room");
  }
  Require((src - mic).norm() >= 0.01, kBadConfig,
          "source and microphone coincide (< 1 cm)");

  const double c = room.speed_of_sound;
  const double direct_delay = (src - mic).norm() / c * fs;
  const int64_t min_len = static_cast<int64_t>(direct_delay) + 16;
  const int64_t len =
      std::max<int64_t>(static_cast<int64_t>(std::ceil(1.2 * room.t60 * fs)),
                        min_len);

  const double beta = std::sqrt(1.0 - T60ToAbsorption(room.dims, room.t60).alpha);
  const double span_m = c * static_cast<double>(len) / fs;
  int n[3];
  for (int i = 0; i < 3; ++i) {
    int cover = static_cast<int>(std::ceil(span_m / (2.0 * room.dims[i]))) + 1;
    n[i] = room.max_image_order >= 0 ? std::min(room.max_image_order, cover)
                                     : cover;
  }

  // Reflection coefficients beta^k, precomputed up to the largest possible
  // per-image reflection count.
  const int max_pow = 2 * (n[0] + n[1] + n[2]) + 3;
  std::vector<double> bpow(max_pow + 1);
  bpow[0] = 1.0;
  for (int i = 1; i <= max_pow; ++i) bpow[i] = bpow[i - 1] * beta;

  VecF rir = VecF::Zero(len);
  const double fs_over_c = fs / c;
  const double span2 = (span_m + 1.0) * (span_m + 1.0);
  for (int mx = -n[0]; mx <= n[0]; ++mx) {
    const double rmx = 2.0 * mx * room.dims.x();
    for (int q = 0; q <= 1; ++q) {
      const double dx = (1 - 2 * q) * src.x() - mic.x() + rmx;
      const int refx = std::abs(mx - q) + std::abs(mx);
      for (int my = -n[1]; my <= n[1]; ++my) {
        const double rmy = 2.0 * my * room.dims.y();
        for (int j = 0; j <= 1; ++j) {
          const double dy = (1 - 2 * j) * src.y() - mic.y() + rmy;
          if (dx * dx + dy * dy > span2) continue;  // beyond the RIR window
          const int refy = std::abs(my - j) + std::abs(my);
          for (int mz = -n[2]; mz <= n[2]; ++mz) {
            const double rmz = 2.0 * mz * room.dims.z();
            for (int k = 0; k <= 1; ++k) {
              const double dz = (1 - 2 * k) * src.z() - mic.z() + rmz;
              const int refk = std::abs(mz - k) + std::abs(mz);
              const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
              const double delay = dist * fs_over_c;
              if (delay >= len + 4) continue;
              const double amp =
                  bpow[refx + refy + refk] / (4.0 * kPi * std::max(dist, 1e-2));
              AddArrival(delay, amp, rir);
            }
          }
        }
      }
    }
  }
  return rir;
}

double SchroederT60(const VecF& rir, int fs) {
  Require(rir.size() > 0, kBadConfig, "empty RIR");
  // Backward energy integration in double.
  std::vector<double> edc(rir.size());
  double acc = 0.0;
  for (int64_t i = rir.size() - 1; i >= 0; --i) {
    acc += static_cast<double>(rir[i]) * rir[i];
    edc[i] = acc;
  }
  Require(acc > 0.0, kBadConfig, "silent RIR");
  const double total = acc;
  // Linear fit of the decay curve (dB vs time) between -5 and -25 dB.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int64_t count = 0;
  for (size_t i = 0; i < edc.size(); ++i) {
    const double db = 10.0 * std::log10(edc[i] / total + 1e-30);
    if (db > -5.0 || db < -25.0) continue;
    const double t = static_cast<double>(i) / fs;
    sx += t;
    sy += db;
    sxx += t * t;
    sxy += t * db;
    ++count;
  }
  Require(count >= 10, kBadConfig, "decay range too short for a T60 fit");
  const double slope =
      (count * sxy - sx * sy) / std::max(count * sxx - sx * sx, 1e-30);
  Require(slope < 0.0, kBadConfig, "non-decaying energy curve");
  return -60.0 / slope;
}

}  // namespace geopse
