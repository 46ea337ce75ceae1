#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace pg5 {

/// The one-parameter branch matrix of the 2222 pair: eta on the unit circle,
/// alpha = (sqrt5 eta - 1)/(sqrt5 - eta) (unit modulus), U the displayed 4x4
/// unitary, and f = Tr(U U^T) - 2, the rotational eigenvalue sum test value.
struct BranchMatrix2222 {
  std::complex<double> eta;
  std::complex<double> alpha;
  Eigen::Matrix4cd U;
  double unitarity_residual = 0.0;  // ||U U* - I||_F
  std::complex<double> f;
};

BranchMatrix2222 branch_matrix(std::complex<double> eta);

/// The admissible eigenvalue-sum targets for the depth-3 rotational
/// eigenvectors: two cube roots of unity summing to a real value.
inline std::vector<double> branch_targets() { return {2.0, -1.0}; }

struct FSolution {
  std::complex<double> eta;
  std::complex<double> f;
  double error;  // |f - target|
};

/// Scan of the unit circle plus local refinement: all eta with f(eta) within
/// tol of the target, deduplicated.
std::vector<FSolution> locate_f_solutions(double target, double tol = 1e-9,
                                          int grid = 1 << 13);

}  // namespace pg5
