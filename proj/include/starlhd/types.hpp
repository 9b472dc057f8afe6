#pragma once

#include <vector>

namespace starlhd {

using IntMatrix = std::vector<std::vector<int>>;
using RealMatrix = std::vector<std::vector<double>>;

}  // namespace starlhd
