#pragma once

#include <string>

#include <Eigen/Dense>

#include "lopcoint/data.hpp"
#include "lopcoint/rng.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(LOPCOINT_TEST_DATA) + "/" + name; }

inline lopcoint::PricePanel load(const std::string& name) {
  return lopcoint::load_panel(data_path(name), lopcoint::ColumnMapping{});
}

inline Eigen::MatrixXd random_matrix(lopcoint::Rng& rng, Eigen::Index r, Eigen::Index c) {
  Eigen::MatrixXd m(r, c);
  for (Eigen::Index j = 0; j < c; ++j)
    for (Eigen::Index i = 0; i < r; ++i) m(i, j) = rng.normal();
  return m;
}

}  // namespace testing
