#pragma once

// rho_k = sigma_k (x) 1, Sigma_k = 1 (x) sigma_k in the standard representation.

#include <complex>

#include <Eigen/Core>

namespace abex::dirac {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

inline Mat2 pauli(int k) {
  const std::complex<double> i(0.0, 1.0);
  Mat2 s;
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: s.setIdentity();
  }
  return s;
}

inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

inline Mat4 rho(int k) { return kron(pauli(k), Mat2::Identity()); }
inline Mat4 Sigma(int k) { return kron(Mat2::Identity(), pauli(k)); }

}  // namespace abex::dirac
