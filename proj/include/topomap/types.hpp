#pragma once

#include <vector>

namespace topomap {

// Row-per-sample feature matrix shared by the SOM, the classifier and the
// dataset IO. All rows must have equal length.
using DataMatrix = std::vector<std::vector<double>>;

}  // namespace topomap
