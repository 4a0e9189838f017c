// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_GEOMETRY_HPP_
#define GEOPSE_GEOMETRY_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "geopse/common.hpp"

namespace geopse {

enum class GeometryKind { kCircular, kTriangular, kRectangular, kLinear };

// Microphone positions in meters relative to the array centroid.
struct ArrayGeometry {
  std::string name;
  std::vector<Eigen::Vector3d> mics;

  int NumMics() const { return static_cast<int>(mics.size()); }
  void Validate() const;
};

// size_param_m: radius for circular and triangular (circumscribed), side
// for rectangular, total length for linear. The 7-mic circular array is 6
// evenly spaced perimeter mics plus one center mic.
ArrayGeometry MakeGeometry(GeometryKind kind, int n_mics, double size_param_m);

// Built-in names: circ7, tri4, rect4, circ6, tri3, circ5, lin3, circ8.
// Anything else is treated as a path to a geometry JSON file.
ArrayGeometry GeometryByName(const std::string& name_or_path);

ArrayGeometry LoadGeometryJson(const std::string& path);
void SaveGeometryJson(const std::string& path, const ArrayGeometry& g);

std::vector<std::string> BuiltinGeometryNames();

}  // namespace geopse

#endif  // GEOPSE_GEOMETRY_HPP_
