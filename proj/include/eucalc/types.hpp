#pragma once

#include <Eigen/Core>

#include <cstdint>

namespace eucalc {

// All arithmetic in this library is exact integer arithmetic.
using Int = std::int64_t;
using Index = Eigen::Index;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using BoolGrid = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

// A constructible function is one integer per stratum, in the model's
// canonical stratum order.
using ConstructibleFunction = IntVector;

}  // namespace eucalc
