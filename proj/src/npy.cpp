// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "geopse/npy.hpp"

#include <fstream>
#include <sstream>

namespace geopse {

void SaveNpy(const std::string& path, const std::vector<int64_t>& shape,
             const float* data) {
  std::ostringstream dict;
  dict << "{'descr': '<f4', 'fortran_order': False, 'shape': (";
  int64_t count = 1;
  for (size_t i = 0; i < shape.size(); ++i) {
    dict << shape[i] << (shape.size() == 1 ? "," : (i + 1 < shape.size() ? ", " : ""));
    count *= shape[i];
  }
  dict << "), }";
  std::string header = dict.str();
  // Pad so that magic(6) + version(2) + len(2) + header is a multiple of 64.
  const size_t base = 10 + header.size() + 1;
  header.append(64 - (base % 64 == 0 ? 64 : base % 64), ' ');
  header.push_back('\n');

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  Require(f.good(), kIoError, "cannot write npy file: " + path);
  f.write("\x93NUMPY\x01\x00", 8);
  const uint16_t hlen = static_cast<uint16_t>(header.size());
  f.write(reinterpret_cast<const char*>(&hlen), 2);
  f.write(header.data(), static_cast<std::streamsize>(header.size()));
  f.write(reinterpret_cast<const char*>(data),
          static_cast<std::streamsize>(count * sizeof(float)));
  Require(f.good(), kIoError, "short write: " + path);
}

void SaveNpy(const std::string& path, const MatF& m) {
  // Eigen stores column-major; transpose into a row-major buffer.
  std::vector<float> buf(static_cast<size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      buf[static_cast<size_t>(r) * m.cols() + c] = m(r, c);
    }
  }
  SaveNpy(path, {m.rows(), m.cols()}, buf.data());
}

}  // namespace geopse
