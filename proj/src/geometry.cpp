// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "geopse/geometry.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace geopse {

using json = nlohmann::json;

void ArrayGeometry::Validate() const {
  Require(!mics.empty(), kBadConfig, "geometry has no microphones");
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& p : mics) centroid += p;
  centroid /= static_cast<double>(mics.size());
  Require(centroid.norm() < 1e-9, kBadConfig,
          "geometry centroid is not at the origin");
  for (size_t i = 0; i < mics.size(); ++i) {
    for (size_t j = i + 1; j < mics.size(); ++j) {
      Require((mics[i] - mics[j]).norm() > 1e-3, kBadConfig,
              "duplicate microphone positions (< 1 mm apart)");
    }
  }
}

namespace {

void Recenter(ArrayGeometry& g) {
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& p : g.mics) centroid += p;
  centroid /= static_cast<double>(g.mics.size());
  for (auto& p : g.mics) p -= centroid;
}

ArrayGeometry Circle(int n, double r) {
  ArrayGeometry g;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * kPi * k / n;
    g.mics.emplace_back(r * std::cos(a), r * std::sin(a), 0.0);
  }
  return g;
}

}  // namespace

ArrayGeometry MakeGeometry(GeometryKind kind, int n_mics, double size_param_m) {
  Require(n_mics >= 1, kBadConfig, "need at least one microphone");
  Require(size_param_m > 0.0, kBadConfig, "geometry size must be positive");
  ArrayGeometry g;
  switch (kind) {
    case GeometryKind::kCircular: {
      Require(n_mics >= 2, kBadConfig, "circular array needs >= 2 mics");
      if (n_mics == 7) {
        // 6 perimeter mics + 1 center mic.
        g = Circle(6, size_param_m);
        g.mics.emplace_back(0.0, 0.0, 0.0);
      } else {
        g = Circle(n_mics, size_param_m);
      }
      break;
    }
    case GeometryKind::kTriangular: {
      Require(n_mics == 3 || n_mics == 4, kBadConfig,
              "triangular array supports 3 or 4 mics");
      g = Circle(3, size_param_m);
      if (n_mics == 4) g.mics.emplace_back(0.0, 0.0, 0.0);
      break;
    }
    case GeometryKind::kRectangular: {
      Require(n_mics == 4, kBadConfig, "rectangular array supports 4 mics");
      const double h = size_param_m / 2.0;
      g.mics.emplace_back(h, h, 0.0);
      g.mics.emplace_back(-h, h, 0.0);
      g.mics.emplace_back(-h, -h, 0.0);
      g.mics.emplace_back(h, -h, 0.0);
      break;
    }
    case GeometryKind::kLinear: {
      Require(n_mics >= 2, kBadConfig, "linear array needs >= 2 mics");
      for (int k = 0; k < n_mics; ++k) {
        const double x =
            -size_param_m / 2.0 + size_param_m * k / (n_mics - 1);
        g.mics.emplace_back(x, 0.0, 0.0);
      }
      break;
    }
  }
  Recenter(g);
  g.Validate();
  return g;
}

std::vector<std::string> BuiltinGeometryNames() {
  return {"circ7", "tri4", "rect4", "circ6", "tri3", "circ5", "lin3", "circ8"};
}

ArrayGeometry GeometryByName(const std::string& name_or_path) {
  ArrayGeometry g;
  if (name_or_path == "circ7") {
    g = MakeGeometry(GeometryKind::kCircular, 7, 0.0425);
  } else if (name_or_path == "tri4") {
    g = MakeGeometry(GeometryKind::kTriangular, 4, 0.0425);
  } else if (name_or_path == "rect4") {
    // Square inscribed in the r = 4.25 cm circle.
    g = MakeGeometry(GeometryKind::kRectangular, 4, 0.0425 * std::sqrt(2.0));
  } else if (name_or_path == "circ6") {
    g = MakeGeometry(GeometryKind::kCircular, 6, 0.0425);
  } else if (name_or_path == "tri3") {
    g = MakeGeometry(GeometryKind::kTriangular, 3, 0.0425);
  } else if (name_or_path == "circ5") {
    g = MakeGeometry(GeometryKind::kCircular, 5, 0.03);
  } else if (name_or_path == "lin3") {
    g = MakeGeometry(GeometryKind::kLinear, 3, 0.06);
  } else if (name_or_path == "circ8") {
    g = MakeGeometry(GeometryKind::kCircular, 8, 0.10);
  } else {
    return LoadGeometryJson(name_or_path);
  }
  g.name = name_or_path;
  return g;
}

ArrayGeometry LoadGeometryJson(const std::string& path) {
  std::ifstream f(path);
  Require(f.good(), kIoError, "cannot open geometry file: " + path);
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::exception& e) {
    Fail(kBadConfig, "malformed geometry JSON (" + path + "): " + e.what());
  }
  Require(doc.contains("name") && doc.contains("mics_m"), kBadConfig,
          "geometry JSON needs 'name' and 'mics_m': " + path);
  ArrayGeometry g;
  g.name = doc["name"].get<std::string>();
  for (const auto& row : doc["mics_m"]) {
    Require(row.is_array() && row.size() == 3, kBadConfig,
            "each mic position must be [x, y, z]: " + path);
    g.mics.emplace_back(row[0].get<double>(), row[1].get<double>(),
                        row[2].get<double>());
  }
  g.Validate();
  return g;
}

void SaveGeometryJson(const std::string& path, const ArrayGeometry& g) {
  json doc;
  doc["name"] = g.name;
  json mics = json::array();
  for (const auto& p : g.mics) {
    mics.push_back({p.x(), p.y(), p.z()});
  }
  doc["mics_m"] = mics;
  std::ofstream f(path, std::ios::trunc);
  Require(f.good(), kIoError, "cannot write geometry file: " + path);
  f << doc.dump(2) << "\n";
}

}  // namespace geopse
