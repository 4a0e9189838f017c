// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_SCENE_HPP_
#define GEOPSE_SCENE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "geopse/geometry.hpp"
#include "geopse/room.hpp"
#include "geopse/rng.hpp"
#include "geopse/sources.hpp"

namespace geopse {

enum class SceneConstraint { kNone, kSimilarAngle, kSimilarDistance };

SceneConstraint ConstraintFromString(const std::string& s);
std::string ToString(SceneConstraint c);

struct NoiseSource {
  Eigen::Vector3d pos;
  NoiseKind kind = NoiseKind::kWhite;
  uint64_t seed = 0;
};

// Complete generative description of one utterance. Rendering is a pure
// function of this struct.
struct SceneSpec {
  RoomSpec room;
  std::string geometry_name;
  Eigen::Vector3d array_center = {0, 0, 0};
  Eigen::Vector3d target_pos = {0, 0, 0};
  std::optional<Eigen::Vector3d> interferer_pos;
  std::vector<NoiseSource> noise_sources;
  std::optional<double> sir_db;
  double snr_db = 10.0;
  double duration_s = 4.0;
  double enroll_s = 4.0;

  uint64_t target_voice_seed = 0;
  uint64_t target_utt_seed = 0;
  uint64_t enroll_utt_seed = 0;
  uint64_t interferer_voice_seed = 0;
  uint64_t interferer_utt_seed = 0;

  std::string constraint = "none";
  uint64_t seed = 0;

  void Validate() const;
  std::string ToJson() const;
  static SceneSpec FromJson(const std::string& text);
};

struct MixtureExample {
  Wave mixture;         // N x M
  Wave target_ref;      // reverberant clean target at each mic, N x M
  Wave interferer_ref;  // N x M, zero columns when absent
  Wave noise_ref;       // N x M
  VecF enrollment;      // clean single channel
  SceneSpec meta;
  double realized_sir_db = 0.0;  // NaN-free; 0 when no interferer
  double realized_snr_db = 0.0;
};

struct DatasetConfig {
  std::vector<std::string> geometries = {"circ7"};
  double t60_lo = 0.15, t60_hi = 0.6;
  double sir_lo = 0.0, sir_hi = 10.0;
  double snr_lo = 0.0, snr_hi = 15.0;
  double interferer_prob = 0.6;
  double speaker_dist_lo = 0.5, speaker_dist_hi = 2.5;
  double duration_s = 4.0;
  double enroll_s = 4.0;
  int num_isotropic = 8;  // far-sphere directional approximation
  double directional_noise_prob = 0.5;
  double array_height = 1.2;
  double room_x_lo = 4.0, room_x_hi = 8.0;
  double room_y_lo = 3.2, room_y_hi = 7.0;
  double room_z_lo = 2.6, room_z_hi = 3.5;
};

// Rejection-samples a scene satisfying the constraint; deterministic given
// the rng state. Throws after 10,000 failed draws.
SceneSpec SampleScene(Rng& rng, const DatasetConfig& cfg,
                      SceneConstraint constraint);

MixtureExample RenderScene(const SceneSpec& spec);

}  // namespace geopse

#endif  // GEOPSE_SCENE_HPP_
