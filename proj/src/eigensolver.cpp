#include "aqc/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>

#include "aqc/errors.hpp"

namespace aqc {

void fix_sign(std::span<double> v) {
  double vmax = 0.0;
  for (double x : v) vmax = std::max(vmax, std::abs(x));
  const double floor = 1e-10 * vmax;
  for (double x : v) {
    if (std::abs(x) > floor) {
      if (x < 0.0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

Eigen::MatrixXd dense_matrix(const InterpolatedHamiltonian& h) {
  if (h.n_qubits() > kMaxDenseQubits)
    throw CapacityError("dense construction limited to " +
                        std::to_string(kMaxDenseQubits) + " qubits");
  const auto dim = static_cast<Eigen::Index>(h.dimension());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    m(s, s) = h.diagonal(static_cast<std::size_t>(s));
    for (int i = 0; i < h.n_qubits(); ++i) m(s, s ^ (Eigen::Index{1} << i)) = h.hopping();
  }
  return m;
}

std::vector<double> dense_spectrum(const InterpolatedHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_matrix(h),
                                                    Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

class BlockKrylov {
 public:
  BlockKrylov(const InterpolatedHamiltonian& h, int k, const SolverOptions& o)
      : h_(h),
        opts_(o),
        k_(k),
        dim_(static_cast<Index>(h.dimension())),
        rng_(o.seed) {
    block_ = o.block_size > 0 ? o.block_size : std::max(2, k);
    block_ = static_cast<int>(std::min<Index>(block_, dim_));
    max_basis_ = static_cast<int>(
        std::min<Index>(dim_, std::max(o.max_basis, 3 * block_ + k)));
    keep_ = std::min(max_basis_ - block_, std::max(k + block_, max_basis_ / 2));
    tol_ = o.tolerance * std::max(h.spectral_scale(), 1e-300);
    V_.resize(dim_, max_basis_);
    W_.resize(dim_, max_basis_);
    T_ = MatrixXd::Zero(max_basis_, max_basis_);
  }

  EigenResult run(std::span<const std::vector<double>> warm) {
    seed_basis(warm);
    std::vector<double> residuals(k_, std::numeric_limits<double>::infinity());
    while (true) {
      Eigen::SelfAdjointEigenSolver<MatrixXd> es(T_.topLeftCorner(cols_, cols_));
      const VectorXd theta = es.eigenvalues();
      const MatrixXd& Y = es.eigenvectors();
      const int nb = static_cast<int>(std::min<Index>(block_, cols_));
      const int nr = static_cast<int>(std::min<Index>(std::max(block_, k_), cols_));

      MatrixXd X = V_.leftCols(cols_) * Y.leftCols(nr);
      MatrixXd R = W_.leftCols(cols_) * Y.leftCols(nr);
      for (int i = 0; i < nr; ++i) R.col(i) -= theta(i) * X.col(i);

      bool all_converged = cols_ >= k_;
      std::vector<bool> converged(nr, false);
      for (int i = 0; i < nr; ++i) {
        const double r = R.col(i).norm();
        if (i < k_) residuals[i] = r;
        converged[i] = r <= tol_;
        if (i < k_ && !converged[i]) all_converged = false;
      }
      // Once the full space is spanned the Ritz pairs are exact.
      if (cols_ == dim_) all_converged = true;

      if (all_converged) {
        auto result = finalize(X, theta);
        if (result) return std::move(*result);
      }
      if (matvecs_ >= opts_.max_matvecs)
        throw SolverError("eigensolver did not converge after " +
                              std::to_string(matvecs_) + " matrix-vector products",
                          residuals);

      if (cols_ + nb > max_basis_) restart(Y, theta);

      int added = 0;
      // Expand with the lowest unconverged Ritz pairs, block_ at a time.
      for (int i = 0; i < nr && added < nb && cols_ < max_basis_; ++i) {
        if (converged[i]) continue;
        VectorXd t = R.col(i);
        if (opts_.diagonal_preconditioner) precondition(t, X.col(i), theta(i));
        if (append(t)) ++added;
      }
      if (added == 0 && cols_ < max_basis_ && cols_ < dim_) {
        VectorXd t = random_vector();
        append(t);
      }
    }
  }

 private:
  VectorXd random_vector() {
    std::normal_distribution<double> gauss(0.0, 1.0);
    VectorXd v(dim_);
    for (Index i = 0; i < dim_; ++i) v(i) = gauss(rng_);
    return v;
  }

  // Start block: warm vectors as given, unit vectors on the lowest diagonal
  // entries (one per classical well near lambda = 1), and one random vector.
  void seed_basis(std::span<const std::vector<double>> warm) {
    for (const auto& w : warm) {
      if (static_cast<Index>(w.size()) != dim_)
        throw InputError("warm-start vector has wrong length");
      if (cols_ >= max_basis_ - block_) break;
      VectorXd v = Eigen::Map<const VectorXd>(w.data(), dim_);
      append(v);
    }
    const Index n_unit = std::min<Index>(block_, dim_ - 1);
    std::vector<Index> order(dim_);
    for (Index s = 0; s < dim_; ++s) order[s] = s;
    std::partial_sort(order.begin(), order.begin() + n_unit, order.end(),
                      [this](Index a, Index b) {
                        const double da = h_.diagonal(static_cast<std::size_t>(a));
                        const double db = h_.diagonal(static_cast<std::size_t>(b));
                        return da != db ? da < db : a < b;
                      });
    for (Index u = 0; u < n_unit && cols_ < max_basis_ - 1; ++u) {
      VectorXd v = VectorXd::Zero(dim_);
      v(order[u]) = 1.0;
      append(v);
    }
    int tries = 0;
    do {
      if (cols_ >= std::min<Index>(max_basis_, dim_)) break;
      VectorXd v = random_vector();
      append(v);
    } while (cols_ < std::min<Index>(block_, dim_) && ++tries < 4 * block_);
  }

  // Two classical Gram-Schmidt passes against the current basis.
  bool append(VectorXd& v) {
    const double start = v.norm();
    if (!(start > 0.0)) return false;
    for (int pass = 0; pass < 2; ++pass) {
      if (cols_ == 0) break;
      VectorXd c = V_.leftCols(cols_).transpose() * v;
      v.noalias() -= V_.leftCols(cols_) * c;
    }
    const double nrm = v.norm();
    if (nrm <= 1e-10 * start) return false;
    v /= nrm;
    V_.col(cols_) = v;
    h_.apply(std::span<const double>(V_.col(cols_).data(), dim_),
             std::span<double>(W_.col(cols_).data(), dim_));
    ++matvecs_;
    VectorXd col = V_.leftCols(cols_ + 1).transpose() * W_.col(cols_);
    T_.block(0, cols_, cols_ + 1, 1) = col;
    T_.block(cols_, 0, 1, cols_ + 1) = col.transpose();
    ++cols_;
    return true;
  }

  void restart(const MatrixXd& Y, const VectorXd& theta) {
    const int keep = std::min(keep_, static_cast<int>(cols_));
    MatrixXd Vk = V_.leftCols(cols_) * Y.leftCols(keep);
    MatrixXd Wk = W_.leftCols(cols_) * Y.leftCols(keep);
    V_.leftCols(keep) = Vk;
    W_.leftCols(keep) = Wk;
    T_.setZero();
    T_.topLeftCorner(keep, keep) = theta.head(keep).asDiagonal();
    cols_ = keep;
    ++restarts_;
  }

  // Olsen-corrected Davidson step: t = M^-1 r - eps M^-1 x with eps chosen
  // so that t stays orthogonal to x; avoids stagnation when M ~ H - theta.
  void precondition(VectorXd& t, const VectorXd& x, double theta) const {
    const double floor = 1e-8 * std::max(h_.spectral_scale(), 1.0);
    VectorXd mx(dim_);
    for (Index s = 0; s < dim_; ++s) {
      double d = h_.diagonal(static_cast<std::size_t>(s)) - theta;
      if (std::abs(d) < floor) d = d < 0.0 ? -floor : floor;
      t(s) /= d;
      mx(s) = x(s) / d;
    }
    const double denom = x.dot(mx);
    if (std::abs(denom) > 0.0) t -= (x.dot(t) / denom) * mx;
  }

  std::optional<EigenResult> finalize(const MatrixXd& X, const VectorXd& theta) {
    EigenResult out;
    out.eigenvalues.resize(k_);
    out.eigenvectors.resize(k_);
    out.residual_norms.resize(k_);
    std::vector<double> hx(dim_);
    bool ok = true;
    for (int i = 0; i < k_; ++i) {
      std::vector<double> v(X.col(i).data(), X.col(i).data() + dim_);
      fix_sign(v);
      h_.apply(v, hx);
      ++matvecs_;
      double rr = 0.0;
      for (Index s = 0; s < dim_; ++s) {
        const double d = hx[s] - theta(i) * v[s];
        rr += d * d;
      }
      out.eigenvalues[i] = theta(i);
      out.residual_norms[i] = std::sqrt(rr);
      out.eigenvectors[i] = std::move(v);
      if (out.residual_norms[i] > tol_ && cols_ < dim_) ok = false;
    }
    if (!ok) {
      // Accumulated drift in W; rebuild the basis from the current Ritz block.
      MatrixXd Xk = X.leftCols(std::min<Index>(X.cols(), block_));
      cols_ = 0;
      T_.setZero();
      for (Index i = 0; i < Xk.cols(); ++i) {
        VectorXd v = Xk.col(i);
        append(v);
      }
      return std::nullopt;
    }
    out.matvecs = matvecs_;
    out.restarts = restarts_;
    return out;
  }

  const InterpolatedHamiltonian& h_;
  SolverOptions opts_;
  int k_;
  Index dim_;
  int block_ = 2;
  int max_basis_ = 0;
  int keep_ = 0;
  double tol_ = 0.0;
  std::mt19937_64 rng_;
  MatrixXd V_, W_, T_;
  Index cols_ = 0;
  int matvecs_ = 0;
  int restarts_ = 0;
};

}  // namespace

EigenResult lowest_eigenpairs(const InterpolatedHamiltonian& h, int k,
                              const SolverOptions& options,
                              std::span<const std::vector<double>> warm_start) {
  if (k < 1 || k > kMaxEigenpairs)
    throw InputError("eigenpair count must be in 1.." +
                     std::to_string(kMaxEigenpairs));
  if (static_cast<std::size_t>(k) > h.dimension())
    throw InputError("more eigenpairs requested than the space holds");
  BlockKrylov solver(h, k, options);
  return solver.run(warm_start);
}

}  // namespace aqc
