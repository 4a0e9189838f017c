// Copyright 2026 The geopse authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef GEOPSE_NPY_HPP_
#define GEOPSE_NPY_HPP_

#include <string>
#include <vector>

#include "geopse/common.hpp"

namespace geopse {

// Writes a C-order float32 .npy (format 1.0) for cross-checking feature
// dumps with external tools. `data` is laid out row-major per `shape`.
void SaveNpy(const std::string& path, const std::vector<int64_t>& shape,
             const float* data);

// Row-major dump of an Eigen matrix (rows, cols).
void SaveNpy(const std::string& path, const MatF& m);

}  // namespace geopse

#endif  // GEOPSE_NPY_HPP_
