#ifndef TASKCE_TYPES_HPP
#define TASKCE_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>

namespace taskce {

using Scalar = double;
using Index = Eigen::Index;

using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using ArrayX = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
using IntVector = Eigen::VectorXi;
using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using CountVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

}  // namespace taskce

#endif  // TASKCE_TYPES_HPP
