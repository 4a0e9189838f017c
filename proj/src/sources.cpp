// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "geopse/sources.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <vector>

#include "geopse/rng.hpp"

namespace geopse {
namespace {

// Second-order resonator (all-pole). Center frequency and bandwidth in Hz.
struct Resonator {
  double a1 = 0.0, a2 = 0.0, gain = 1.0;
  double z1 = 0.0, z2 = 0.0;

  void Set(double freq, double bw, int fs) {
    const double r = std::exp(-kPi * bw / fs);
    const double theta = 2.0 * kPi * freq / fs;
    a1 = 2.0 * r * std::cos(theta);
    a2 = -r * r;
    gain = (1.0 - r) * std::sqrt(1.0 - 2.0 * r * std::cos(2.0 * theta) + r * r);
  }

  double Step(double x) {
    const double y = gain * x + a1 * z1 + a2 * z2;
    z2 = z1;
    z1 = y;
    return y;
  }
};

struct Vowel {
  double f1, f2, f3;
};

constexpr Vowel kVowels[] = {
    {730, 1090, 2440},  // a
    {530, 1840, 2480},  // e
    {270, 2290, 3010},  // i
    {570, 840, 2410},   // o
    {300, 870, 2240},   // u
    {500, 1500, 2500},  // schwa
};

enum class SegKind { kVoiced, kUnvoiced, kPause };

struct Segment {
  SegKind kind;
  double dur;
  Vowel vowel;       // voiced only
  double noise_c;    // unvoiced band center
  double amp;
};

void NormalizeRms(VecF& x, float target) {
  const float rms = std::sqrt(x.squaredNorm() / std::max<float>(x.size(), 1));
  if (rms > 1e-12f) x *= target / rms;
}

}  // namespace

VecF SynthSpeech(uint64_t voice_seed, uint64_t utt_seed, double seconds,
                 int fs) {
  Require(seconds > 0.0 && seconds <= 120.0, kBadConfig,
          "speech duration out of range");
  Rng vr = Rng(voice_seed).Fork("voice");
  const double f0_base = 95.0 + 135.0 * vr.Uniform();
  const double formant_scale = 0.85 + 0.30 * vr.Uniform();
  const double vibrato_hz = 0.5 + 0.7 * vr.Uniform();
  const double breath = 0.02 + 0.05 * vr.Uniform();

  Rng ur = Rng(voice_seed ^ (utt_seed * 0xD1B54A32D192ED03ull)).Fork("utt");

  // Segment plan.
  std::vector<Segment> plan;
  double planned = 0.0;
  while (planned < seconds) {
    Segment s;
    const double kind_draw = ur.Uniform();
    if (kind_draw < 0.62) {
      s.kind = SegKind::kVoiced;
      s.dur = 0.07 + 0.17 * ur.Uniform();
      s.vowel = kVowels[ur.RandInt(0, 5)];
      s.amp = 0.7 + 0.3 * ur.Uniform();
    } else if (kind_draw < 0.85) {
      s.kind = SegKind::kUnvoiced;
      s.dur = 0.05 + 0.10 * ur.Uniform();
      s.noise_c = 1800.0 + 3500.0 * ur.Uniform();
      s.amp = 0.25 + 0.2 * ur.Uniform();
    } else {
      s.kind = SegKind::kPause;
      s.dur = 0.04 + 0.12 * ur.Uniform();
      s.amp = 0.0;
    }
    plan.push_back(s);
    planned += s.dur;
  }

  const int64_t n = static_cast<int64_t>(seconds * fs);
  VecF out = VecF::Zero(n);
  Resonator r1, r2, r3, frio;
  double cur_f1 = 500 * formant_scale, cur_f2 = 1500 * formant_scale,
         cur_f3 = 2500 * formant_scale;
  double phase = 1.0;  // emit a pulse at the first voiced sample
  const double smooth = std::exp(-1.0 / (0.012 * fs));  // 12 ms glide
  const double phi0 = 2.0 * kPi * ur.Uniform();

  size_t seg_idx = 0;
  double seg_end = plan[0].dur;
  int64_t seg_start_n = 0;
  for (int64_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / fs;
    while (t >= seg_end && seg_idx + 1 < plan.size()) {
      ++seg_idx;
      seg_start_n = i;
      seg_end += plan[seg_idx].dur;
    }
    const Segment& seg = plan[seg_idx];

    // Raised-cosine fade at both segment edges, 12 ms.
    const double into = static_cast<double>(i - seg_start_n) / fs;
    const double until = seg_end - t;
    double env = 1.0;
    if (into < 0.012) env *= 0.5 - 0.5 * std::cos(kPi * into / 0.012);
    if (until < 0.012) env *= 0.5 - 0.5 * std::cos(kPi * until / 0.012);

    double sample = 0.0;
    if (seg.kind == SegKind::kVoiced) {
      const Vowel& v = seg.vowel;
      cur_f1 = smooth * cur_f1 + (1 - smooth) * v.f1 * formant_scale;
      cur_f2 = smooth * cur_f2 + (1 - smooth) * v.f2 * formant_scale;
      cur_f3 = smooth * cur_f3 + (1 - smooth) * v.f3 * formant_scale;
      if (i % 64 == 0) {
        r1.Set(cur_f1, 80.0, fs);
        r2.Set(cur_f2, 110.0, fs);
        r3.Set(cur_f3, 160.0, fs);
      }
      const double f0 =
          f0_base * (1.0 + 0.15 * std::sin(2.0 * kPi * vibrato_hz * t + phi0)) *
          (1.0 + 0.01 * ur.Normal());
      phase += f0 / fs;
      double excitation = breath * ur.Normal();
      if (phase >= 1.0) {
        phase -= 1.0;
        excitation += 1.0;
      }
      sample = (r1.Step(excitation) + 0.7 * r2.Step(excitation) +
                0.4 * r3.Step(excitation)) *
               seg.amp;
    } else if (seg.kind == SegKind::kUnvoiced) {
      if (i % 64 == 0) frio.Set(seg.noise_c, 900.0, fs);
      sample = frio.Step(ur.Normal()) * seg.amp * 2.0;
    } else {
      sample = 0.0;
    }
    out[i] = static_cast<float>(sample * env);
  }

  // Remove DC with a gentle one-pole highpass.
  float hp_z = 0.0f;
  const float hp = 1.0f - 2.0f * kPi * 50.0f / fs;
  float prev = 0.0f;
  for (int64_t i = 0; i < n; ++i) {
    const float x = out[i];
    const float y = x - prev + hp * hp_z;
    prev = x;
    hp_z = y;
    out[i] = y;
  }
  NormalizeRms(out, 0.1f);
  return out;
}

NoiseKind NoiseKindFromString(const std::string& s) {
  if (s == "white") return NoiseKind::kWhite;
  if (s == "pink") return NoiseKind::kPink;
  if (s == "speech_shaped") return NoiseKind::kSpeechShaped;
  if (s == "bursts") return NoiseKind::kBursts;
  Fail(kBadConfig, "unknown noise kind: " + s);
}

std::string ToString(NoiseKind k) {
  switch (k) {
    case NoiseKind::kWhite: return "white";
    case NoiseKind::kPink: return "pink";
    case NoiseKind::kSpeechShaped: return "speech_shaped";
    case NoiseKind::kBursts: return "bursts";
  }
  return "white";
}

VecF SynthNoise(NoiseKind kind, uint64_t seed, double seconds, int fs) {
  Require(seconds > 0.0 && seconds <= 600.0, kBadConfig,
          "noise duration out of range");
  const int64_t n = static_cast<int64_t>(seconds * fs);
  Rng rng = Rng(seed).Fork("noise");
  VecF out(n);
  switch (kind) {
    case NoiseKind::kWhite: {
      for (int64_t i = 0; i < n; ++i) out[i] = rng.NormalF();
      break;
    }
    case NoiseKind::kPink: {
      double b0 = 0, b1 = 0, b2 = 0;
      for (int64_t i = 0; i < n; ++i) {
        const double w = rng.Normal();
        b0 = 0.99765 * b0 + w * 0.0990460;
        b1 = 0.96300 * b1 + w * 0.2965164;
        b2 = 0.57000 * b2 + w * 1.0526913;
        out[i] = static_cast<float>(b0 + b1 + b2 + w * 0.1848);
      }
      break;
    }
    case NoiseKind::kSpeechShaped: {
      // Long-term-speech-like tilt: resonance near 500 Hz plus -6 dB/oct.
      Resonator res;
      res.Set(450.0, 600.0, fs);
      double lp = 0.0;
      const double a = std::exp(-2.0 * kPi * 900.0 / fs);
      for (int64_t i = 0; i < n; ++i) {
        const double w = res.Step(rng.Normal());
        lp = a * lp + (1 - a) * w;
        out[i] = static_cast<float>(lp);
      }
      break;
    }
    case NoiseKind::kBursts: {
      for (int64_t i = 0; i < n; ++i) out[i] = 0.05f * rng.NormalF();
      int64_t i = 0;
      while (i < n) {
        i += static_cast<int64_t>((0.25 + 1.2 * rng.Uniform()) * fs);
        const int64_t burst = static_cast<int64_t>(
            (0.05 + 0.25 * rng.Uniform()) * fs);
        const double amp = 0.5 + rng.Uniform();
        for (int64_t k = 0; k < burst && i + k < n; ++k) {
          const double env =
              0.5 - 0.5 * std::cos(2.0 * kPi * k / std::max<int64_t>(burst, 2));
          out[i + k] += static_cast<float>(amp * env * rng.Normal());
        }
        i += burst;
      }
      break;
    }
  }
  NormalizeRms(out, 0.1f);
  return out;
}

VecF Convolve(const VecF& x, const VecF& h) {
  Require(x.size() > 0 && h.size() > 0, kBadConfig, "empty convolution input");
  const int64_t out_len = x.size() + h.size() - 1;
  int64_t nfft = 1;
  while (nfft < out_len) nfft <<= 1;

  Eigen::FFT<float> fft;
  std::vector<float> a(nfft, 0.0f), b(nfft, 0.0f);
  for (int64_t i = 0; i < x.size(); ++i) a[i] = x[i];
  for (int64_t i = 0; i < h.size(); ++i) b[i] = h[i];
  std::vector<std::complex<float>> A, B;
  fft.fwd(A, a);
  fft.fwd(B, b);
  for (size_t i = 0; i < A.size(); ++i) A[i] *= B[i];
  std::vector<float> y;
  fft.inv(y, A);
  VecF out(out_len);
  for (int64_t i = 0; i < out_len; ++i) out[i] = y[i];
  return out;
}

}  // namespace geopse
