#pragma once

// Smith normal form over the integers with unimodular transforms.

#include <cstdint>

#include <Eigen/Core>

namespace morse_bridge {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// P * A * Q = D with P, Q unimodular and D diagonal, d_1 | d_2 | ... ,
/// every d_i > 0 for i < rank.
struct SmithForm {
    IntMatrix D;
    IntMatrix P;
    IntMatrix P_inv;
    IntMatrix Q;
    IntMatrix Q_inv;
    Eigen::Index rank = 0;
};

/// Throws OverflowError if an intermediate entry leaves the int64 range.
SmithForm smith_normal_form(const IntMatrix& A);

}  // namespace morse_bridge
