#include "pg5/branch2222.hpp"

#include <cmath>

namespace pg5 {
namespace {

using Complex = std::complex<double>;

double f_error(double theta, double target) {
  const BranchMatrix2222 bm = branch_matrix(std::polar(1.0, theta));
  return std::abs(bm.f - Complex(target, 0.0));
}

/// Golden-section refinement of a local minimum of |f - target| on [lo, hi].
double refine(double lo, double hi, double target) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f_error(c, target), fd = f_error(d, target);
  for (int it = 0; it < 120 && (b - a) > 1e-14; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f_error(c, target);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f_error(d, target);
    }
  }
  return (a + b) / 2;
}

}  // namespace

BranchMatrix2222 branch_matrix(Complex eta) {
  const double s5 = std::sqrt(5.0);
  BranchMatrix2222 out;
  out.eta = eta;
  out.alpha = (s5 * eta - 1.0) / (s5 - eta);
  const Complex a = out.alpha, e = eta;
  Eigen::Matrix4cd u;
  u << Complex(-1, 0), Complex(s5, 0), Complex(s5, 0), Complex(s5, 0),
       Complex(s5, 0), -s5 * a,        e * a,          s5 * e,
       Complex(s5, 0), Complex(1, 0),  s5 * e,         -s5 * e,
       Complex(s5, 0), s5 * a,         -s5 * a,        Complex(1, 0);
  out.U = u / 4.0;
  out.unitarity_residual =
      (out.U * out.U.adjoint() - Eigen::Matrix4cd::Identity()).norm();
  out.f = (out.U * out.U.transpose()).trace() - 2.0;
  return out;
}

std::vector<FSolution> locate_f_solutions(double target, double tol, int grid) {
  std::vector<double> err(grid);
  for (int i = 0; i < grid; ++i)
    err[i] = f_error(2.0 * M_PI * i / grid, target);
  std::vector<FSolution> out;
  for (int i = 0; i < grid; ++i) {
    const int prev = (i + grid - 1) % grid, next = (i + 1) % grid;
    if (err[i] > err[prev] || err[i] > err[next]) continue;  // keep local minima
    if (err[i] > 0.5) continue;
    const double step = 2.0 * M_PI / grid;
    const double theta = refine(2.0 * M_PI * i / grid - step, 2.0 * M_PI * i / grid + step, target);
    const BranchMatrix2222 bm = branch_matrix(std::polar(1.0, theta));
    const double e = std::abs(bm.f - Complex(target, 0.0));
    if (e > tol) continue;
    bool dup = false;
    for (const auto& s : out)
      if (std::abs(s.eta - bm.eta) < 1e-6) dup = true;
    if (!dup) out.push_back({bm.eta, bm.f, e});
  }
  return out;
}

}  // namespace pg5
