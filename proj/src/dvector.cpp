// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "geopse/dvector.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <vector>

#include "geopse/frame.hpp"
#include "geopse/rng.hpp"
#include "geopse/stft.hpp"

namespace geopse {
namespace {

constexpr int kMelBands = 40;

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

// Triangular mel filterbank over the F STFT bins.
MatF MelBank(int bins, int fft_len, int sample_rate) {
  MatF bank = MatF::Zero(kMelBands, bins);
  const double lo = HzToMel(0.0), hi = HzToMel(sample_rate / 2.0);
  std::vector<double> edges(kMelBands + 2);
  for (int i = 0; i < kMelBands + 2; ++i) {
    edges[i] = MelToHz(lo + (hi - lo) * i / (kMelBands + 1));
  }
  for (int b = 0; b < kMelBands; ++b) {
    for (int f = 0; f < bins; ++f) {
      const double hz = static_cast<double>(f) * sample_rate / fft_len;
      double w = 0.0;
      if (hz >= edges[b] && hz <= edges[b + 1]) {
        w = (hz - edges[b]) / std::max(edges[b + 1] - edges[b], 1e-9);
      } else if (hz > edges[b + 1] && hz <= edges[b + 2]) {
        w = (edges[b + 2] - hz) / std::max(edges[b + 2] - edges[b + 1], 1e-9);
      }
      bank(b, f) = static_cast<float>(w);
    }
  }
  return bank;
}

}  // namespace

VecF DvectorStub(const VecF& enrollment, int sample_rate, int dim) {
  Require(dim >= 1, kBadConfig, "dvector dim must be positive");
  Require(enrollment.size() >= sample_rate, kBadConfig,
          "enrollment must be at least 1 s");

  FrameConfig cfg;
  cfg.sample_rate_hz = sample_rate;
  const CMatF spec = Stft(enrollment, cfg);
  const int T = static_cast<int>(spec.cols());
  const MatF bank = MelBank(cfg.Bins(), cfg.fft_len, sample_rate);

  MatF logmel(kMelBands, T);
  VecF frame_db(T);
  for (int t = 0; t < T; ++t) {
    VecF power = spec.col(t).cwiseAbs2();
    VecF mel = bank * power;
    for (int b = 0; b < kMelBands; ++b) {
      logmel(b, t) = std::log(mel[b] + 1e-10f);
    }
    frame_db[t] = 10.0f * std::log10(power.sum() + 1e-12f);
  }
  // Voice activity: frames within 40 dB of the loudest frame. Per-frame
  // band mean is removed so a gain change shifts nothing.
  const float thresh = frame_db.maxCoeff() - 40.0f;
  std::vector<int> active;
  for (int t = 0; t < T; ++t) {
    if (frame_db[t] >= thresh) active.push_back(t);
  }
  Require(!active.empty(), kBadConfig, "enrollment is silent");

  MatF sel(kMelBands, active.size());
  for (size_t i = 0; i < active.size(); ++i) {
    VecF col = logmel.col(active[i]);
    sel.col(i) = (col.array() - col.mean()).matrix();
  }
  VecF mean = sel.rowwise().mean();
  VecF stdev(kMelBands);
  for (int b = 0; b < kMelBands; ++b) {
    float acc = 0.0f;
    for (Eigen::Index i = 0; i < sel.cols(); ++i) {
      const float d = sel(b, i) - mean[b];
      acc += d * d;
    }
    stdev[b] = std::sqrt(acc / sel.cols());
  }

  VecF stats(2 * kMelBands);
  stats.head(kMelBands) = mean;
  stats.tail(kMelBands) = stdev;

  // Fixed projection, independent of the input.
  Rng rng(Fnv1a("geopse-dvector-projection"));
  MatF proj(dim, 2 * kMelBands);
  for (Eigen::Index i = 0; i < proj.size(); ++i) {
    proj(i) = rng.NormalF() / std::sqrt(static_cast<float>(2 * kMelBands));
  }
  VecF v = proj * stats;
  const float n = v.norm();
  Require(n > 0.0f, kInternal, "degenerate embedding");
  return v / n;
}

VecF ReadDvec(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  Require(f.good(), kIoError, "cannot open embedding file: " + path);
  char magic[4];
  f.read(magic, 4);
  Require(f.good() && std::memcmp(magic, "DVEC", 4) == 0, kBadCheckpoint,
          "bad embedding file magic: " + path);
  uint32_t dim = 0;
  f.read(reinterpret_cast<char*>(&dim), 4);
  Require(f.good() && dim > 0 && dim <= 65536, kBadCheckpoint,
          "bad embedding dimension: " + path);
  VecF v(dim);
  f.read(reinterpret_cast<char*>(v.data()), dim * sizeof(float));
  Require(f.good(), kBadCheckpoint, "truncated embedding file: " + path);
  return v;
}

void WriteDvec(const std::string& path, const VecF& v) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  Require(f.good(), kIoError, "cannot write embedding file: " + path);
  f.write("DVEC", 4);
  const uint32_t dim = static_cast<uint32_t>(v.size());
  f.write(reinterpret_cast<const char*>(&dim), 4);
  f.write(reinterpret_cast<const char*>(v.data()), dim * sizeof(float));
  Require(f.good(), kIoError, "short write: " + path);
}

}  // namespace geopse
