#pragma once

#include <complex>
#include <stdexcept>
#include <Eigen/Dense>

namespace helm {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using CVec2 = Eigen::Vector2cd;
using RVec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

inline constexpr Complex I{0.0, 1.0};

// quarter-turn: Q*(a,b) = (b,-a)
inline Eigen::Matrix2d rot_q() {
    Eigen::Matrix2d q;
    q << 0.0, 1.0, -1.0, 0.0;
    return q;
}

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace helm
