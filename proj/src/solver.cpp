#include "pg5/solver.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace pg5 {
namespace {

using Complex = std::complex<double>;

/// One Gram-matrix entry as a bilinear form: sum of beta * w[p] * conj(w[q]),
/// with identity target on the diagonal.
struct GramEntry {
  struct Term {
    long double beta;
    int p, q;
  };
  std::vector<Term> terms;
  double target = 0.0;
};

std::vector<GramEntry> gram_entries(const CellComplex& c) {
  std::vector<GramEntry> out;
  auto add_block = [&](const CellComplex::Block& blk, const std::vector<long double>* rho) {
    const int r = blk.rows(), s = blk.cols();
    // B B^* - I
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        GramEntry e;
        e.target = i == j ? 1.0 : 0.0;
        for (int k = 0; k < s; ++k) {
          const int pid = blk.cell_ids[i][k], qid = blk.cell_ids[j][k];
          if (rho) {
            // V = rho conj(W): V(i,k) conj(V(j,k)) = rho_ik rho_jk w[q=jk] conj(w[p=ik])
            e.terms.push_back({(*rho)[pid] * (*rho)[qid], qid, pid});
          } else {
            e.terms.push_back({1.0L, pid, qid});
          }
        }
        out.push_back(std::move(e));
      }
    // B^* B - I
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        GramEntry e;
        e.target = i == j ? 1.0 : 0.0;
        for (int k = 0; k < r; ++k) {
          const int pid = blk.cell_ids[k][i], qid = blk.cell_ids[k][j];
          if (rho) {
            // conj(V(k,i)) V(k,j) = rho_ki rho_kj w[p=ki] conj(w[q=kj])
            e.terms.push_back({(*rho)[pid] * (*rho)[qid], pid, qid});
          } else {
            e.terms.push_back({1.0L, qid, pid});
          }
        }
        out.push_back(std::move(e));
      }
  };
  for (const auto& blk : c.unitarity_blocks) add_block(blk, nullptr);
  for (const auto& blk : c.renorm_blocks) add_block(blk, &c.rho);
  return out;
}

/// Levenberg-Marquardt over a chosen real scalar. A short long-double pass
/// polishes converged restarts; some solutions pin one non-gauge direction
/// only at second order and benefit from the extra precision.
template <typename R>
struct LMCore {
  using C = std::complex<R>;
  using Vec = Eigen::Matrix<C, Eigen::Dynamic, 1>;
  using RVec = Eigen::Matrix<R, Eigen::Dynamic, 1>;
  using RMat = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;

  const std::vector<GramEntry>& entries;
  int n_cells;
  R floor_cost;
  R lambda_init = R(1e-3);
  R damping_floor = R(1e-14);

  LMCore(const std::vector<GramEntry>& e, int n, R floor_c)
      : entries(e), n_cells(n), floor_cost(floor_c) {}

  R cost(const Vec& w) const {
    R total(0);
    for (const auto& e : entries) {
      C val(-R(e.target), R(0));
      for (const auto& t : e.terms) val += R(t.beta) * w[t.p] * std::conj(w[t.q]);
      total += std::norm(val);
    }
    return total;
  }

  /// Residual vector (Re/Im per entry) and Jacobian wrt (Re w, Im w) pairs.
  void eval(const Vec& w, RVec& r, RMat& jac) const {
    const int t_count = static_cast<int>(entries.size());
    r.resize(2 * t_count);
    jac.setZero(2 * t_count, 2 * n_cells);
    for (int t = 0; t < t_count; ++t) {
      const auto& e = entries[t];
      C val(-R(e.target), R(0));
      for (const auto& term : e.terms) val += R(term.beta) * w[term.p] * std::conj(w[term.q]);
      r[2 * t] = val.real();
      r[2 * t + 1] = val.imag();
      for (const auto& term : e.terms) {
        const C dp = R(term.beta) * std::conj(w[term.q]);  // d val / d w_p
        jac(2 * t, 2 * term.p) += dp.real();
        jac(2 * t + 1, 2 * term.p) += dp.imag();
        jac(2 * t, 2 * term.p + 1) += -dp.imag();
        jac(2 * t + 1, 2 * term.p + 1) += dp.real();
        const C dq = R(term.beta) * w[term.p];  // d val / d conj(w_q)
        jac(2 * t, 2 * term.q) += dq.real();
        jac(2 * t + 1, 2 * term.q) += dq.imag();
        jac(2 * t, 2 * term.q + 1) += dq.imag();
        jac(2 * t + 1, 2 * term.q + 1) += -dq.real();
      }
    }
  }

  Vec minimize(Vec w, int max_iter) const {
    RVec r;
    RMat jac;
    R lambda = lambda_init;
    R current = cost(w);
    int stalled = 0;
    for (int iter = 0; iter < max_iter && current > floor_cost && stalled < 8; ++iter) {
      const R before = current;
      eval(w, r, jac);
      const RMat jtj = jac.transpose() * jac;
      const RVec g = jac.transpose() * r;
      bool accepted = false;
      for (int tries = 0; tries < 40; ++tries) {
        RMat a = jtj;
        for (int i = 0; i < a.rows(); ++i) a(i, i) += lambda * (jtj(i, i) + damping_floor);
        const RVec step = a.ldlt().solve(-g);
        Vec w_try = w;
        for (int i = 0; i < n_cells; ++i)
          w_try[i] += C(step[2 * i], step[2 * i + 1]);
        const R c_try = cost(w_try);
        if (c_try < current) {
          w = std::move(w_try);
          current = c_try;
          lambda = std::max(lambda / R(3), R(1e-18));
          accepted = true;
          break;
        }
        lambda *= R(4);
        if (lambda > R(1e15)) break;
      }
      if (!accepted) break;
      stalled = (before - current) <= R(1e-14) * before ? stalled + 1 : 0;
    }
    return w;
  }
};

struct LMWorkspace {
  const CellComplex& c;
  std::vector<GramEntry> entries;
  int n_cells;

  explicit LMWorkspace(const CellComplex& cc)
      : c(cc), entries(gram_entries(cc)), n_cells(cc.num_cells()) {}

  double cost(const CellAssignment& w) const {
    return static_cast<double>(LMCore<double>(entries, n_cells, 0).cost(w));
  }

  CellAssignment minimize(CellAssignment w) const {
    const LMCore<double> coarse(entries, n_cells, 1e-30);
    w = coarse.minimize(std::move(w), 250);
    if (coarse.cost(w) > 1e-6) return w;  // obstructed restart, not worth polishing
    LMCore<long double>::Vec wl(w.size());
    for (int i = 0; i < w.size(); ++i)
      wl[i] = std::complex<long double>(w[i].real(), w[i].imag());
    LMCore<long double> fine(entries, n_cells, 1e-37L);
    fine.lambda_init = 1e-9L;
    fine.damping_floor = 1e-26L;
    wl = fine.minimize(std::move(wl), 50);
    for (int i = 0; i < w.size(); ++i)
      w[i] = Complex(static_cast<double>(wl[i].real()), static_cast<double>(wl[i].imag()));
    return w;
  }
};

CellAssignment random_start(const CellComplex& c, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  CellAssignment w(c.num_cells());
  for (int i = 0; i < c.num_cells(); ++i)
    w[i] = std::polar(modulus_seed(c, i), angle(rng));
  return w;
}

}  // namespace

SolveResult solve(const CellComplex& c, int restarts, double tol, std::uint64_t seed) {
  LMWorkspace ws(c);
  SolveResult out;
  out.tol = tol;
  out.seed = seed;
  out.best_residual = std::numeric_limits<double>::infinity();
  for (int i = 0; i < restarts; ++i) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1));
    CellAssignment w = ws.minimize(random_start(c, rng));
    const double res = ws.cost(w) + c.constant_penalty;
    out.restart_residuals.push_back(res);
    if (res < out.best_residual) {
      out.best_residual = res;
      out.best = w;
    }
    if (res < tol) out.solutions.push_back(std::move(w));
  }
  return out;
}

InvariantVector gauge_invariants(const CellComplex& c, const CellAssignment& w) {
  InvariantVector inv;
  inv.moduli.reserve(c.num_cells());
  for (int i = 0; i < c.num_cells(); ++i) inv.moduli.push_back(std::abs(w[i]));
  std::sort(inv.moduli.begin(), inv.moduli.end());

  auto add_quads = [&](const CellComplex::Block& blk) {
    for (int i = 0; i < blk.rows(); ++i)
      for (int i2 = i + 1; i2 < blk.rows(); ++i2)
        for (int j = 0; j < blk.cols(); ++j)
          for (int j2 = j + 1; j2 < blk.cols(); ++j2) {
            const Complex q = w[blk.cell_ids[i][j]] * std::conj(w[blk.cell_ids[i][j2]]) *
                              w[blk.cell_ids[i2][j2]] * std::conj(w[blk.cell_ids[i2][j]]);
            // Fold to (Re, modulus): conjugation-invariant coordinates that stay
            // second-order stable when a loop value sits on the real axis.
            inv.loops.emplace_back(q.real(), std::abs(q));
          }
  };
  for (const auto& blk : c.unitarity_blocks) add_quads(blk);
  for (const auto& blk : c.renorm_blocks) add_quads(blk);
  std::sort(inv.loops.begin(), inv.loops.end(), [](const Complex& x, const Complex& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return inv;
}

double invariant_distance(const InvariantVector& x, const InvariantVector& y) {
  if (x.moduli.size() != y.moduli.size() || x.loops.size() != y.loops.size())
    return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < x.moduli.size(); ++i)
    d = std::max(d, std::abs(x.moduli[i] - y.moduli[i]));
  for (std::size_t i = 0; i < x.loops.size(); ++i)
    d = std::max(d, std::abs(x.loops[i] - y.loops[i]));
  return d;
}

OrbitReport count_gauge_orbits(const CellComplex& c, int restarts, double tol,
                               std::uint64_t seed) {
  const SolveResult sr = solve(c, restarts, tol, seed);
  OrbitReport rep;
  rep.restarts = restarts;
  rep.best_residual = sr.best_residual;
  rep.solutions_found = static_cast<int>(sr.solutions.size());
  if (sr.solutions.empty()) return rep;

  std::vector<InvariantVector> inv;
  inv.reserve(sr.solutions.size());
  for (const auto& w : sr.solutions) inv.push_back(gauge_invariants(c, w));
  const int n = static_cast<int>(inv.size());

  Eigen::MatrixXd dist(n, n);
  dist.setZero();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dist(i, j) = dist(j, i) = invariant_distance(inv[i], inv[j]);
  rep.invariant_diameter = dist.maxCoeff();

  std::vector<double> nn;
  for (int i = 0; i < n && n > 1; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j)
      if (j != i) best = std::min(best, dist(i, j));
    nn.push_back(best);
  }
  if (!nn.empty()) {
    std::sort(nn.begin(), nn.end());
    rep.median_nearest_neighbor = nn[nn.size() / 2];
  }

  // Single-linkage components at a tight threshold.
  const double tight = 1e-6;
  std::vector<int> comp(n, -1);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = k;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && dist(v, j) <= tight) {
          comp[j] = k;
          stack.push_back(j);
        }
    }
    ++k;
  }

  rep.continuum = n >= 8 && k >= std::max(5, n / 3) &&
                  rep.median_nearest_neighbor > tight &&
                  rep.median_nearest_neighbor < 0.25 * rep.invariant_diameter;
  rep.orbit_estimate = rep.continuum ? 1 : k;

  std::vector<bool> seen(k, false);
  for (int i = 0; i < n && static_cast<int>(rep.representatives.size()) < 8; ++i)
    if (!seen[comp[i]]) {
      seen[comp[i]] = true;
      rep.representatives.push_back(sr.solutions[i]);
    }
  return rep;
}

namespace {

nlohmann::json assignment_json(const CellAssignment& w) {
  nlohmann::json cells = nlohmann::json::array();
  for (int i = 0; i < w.size(); ++i)
    cells.push_back({{"re", w[i].real()}, {"im", w[i].imag()}});
  return cells;
}

}  // namespace

nlohmann::json SolveResult::to_json() const {
  return nlohmann::json{{"best_residual", best_residual},
                        {"restart_residuals", restart_residuals},
                        {"solutions_below_tol", solutions.size()},
                        {"tol", tol},
                        {"seed", seed},
                        {"best", assignment_json(best)}};
}

nlohmann::json OrbitReport::to_json() const {
  return nlohmann::json{{"orbit_estimate", orbit_estimate},
                        {"continuum", continuum},
                        {"solutions_found", solutions_found},
                        {"restarts", restarts},
                        {"best_residual", best_residual},
                        {"invariant_diameter", invariant_diameter},
                        {"median_nearest_neighbor", median_nearest_neighbor},
                        {"representatives", representatives.size()}};
}

}  // namespace pg5
