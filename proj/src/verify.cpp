#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "betti.hpp"

namespace flatmorse {

namespace {

Eigen::Vector3d to_eigen(const AlgebraVector& v) { return {v.x, v.y, v.z}; }

AlgebraVector from_eigen(const Eigen::Vector3d& v) {
  return {v(0), v(1), v(2)};
}

bool class_is_interior(const Rational& t) {
  return t != Rational(0) && t != Rational(1);
}

// Orthonormal bases of the class tangent spaces, one per puncture
// (3x2 for interior classes, 3x0 for the frozen point classes).
struct Frame {
  std::vector<Eigen::MatrixXd> cbasis;
  int dim = 0;
};

Frame build_frame(const RepTuple& p) {
  Frame frame;
  frame.dim = 6 * static_cast<int>(p.A.size());
  for (std::size_t j = 0; j < p.C.size(); ++j) {
    if (!class_is_interior(p.cfg.t[j])) {
      frame.cbasis.emplace_back(3, 0);
      continue;
    }
    Eigen::Matrix3d M = class_tangent_map(p.C[j]);
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(M, Eigen::ComputeFullU);
    frame.cbasis.push_back(svd.matrixU().leftCols(2));
    frame.dim += 2;
  }
  return frame;
}

TangentVector tangent_from_coords(const RepTuple& p, const Frame& frame,
                                  const Eigen::VectorXd& x) {
  TangentVector v = TangentVector::zero(p);
  int at = 0;
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    v.a[i] = {x(at), x(at + 1), x(at + 2)};
    v.b[i] = {x(at + 3), x(at + 4), x(at + 5)};
    at += 6;
  }
  for (std::size_t j = 0; j < p.C.size(); ++j) {
    int cols = static_cast<int>(frame.cbasis[j].cols());
    if (cols == 0) continue;
    Eigen::Vector3d c = frame.cbasis[j] * x.segment(at, cols);
    v.c[j] = from_eigen(c);
    at += cols;
  }
  return v;
}

Eigen::VectorXd coords_from_tangent(const RepTuple& p, const Frame& frame,
                                    const TangentVector& v) {
  Eigen::VectorXd x(frame.dim);
  int at = 0;
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    x.segment<3>(at) = to_eigen(v.a[i]);
    x.segment<3>(at + 3) = to_eigen(v.b[i]);
    at += 6;
  }
  for (std::size_t j = 0; j < p.C.size(); ++j) {
    int cols = static_cast<int>(frame.cbasis[j].cols());
    if (cols == 0) continue;
    x.segment(at, cols) = frame.cbasis[j].transpose() * to_eigen(v.c[j]);
    at += cols;
  }
  return x;
}

Eigen::MatrixXd dmu_matrix(const RepTuple& p, const Frame& frame) {
  Eigen::MatrixXd J(3, frame.dim);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(frame.dim);
  for (int k = 0; k < frame.dim; ++k) {
    x(k) = 1;
    J.col(k) = to_eigen(dmu_apply(p, tangent_from_coords(p, frame, x)));
    x(k) = 0;
  }
  return J;
}

// Conjugation-orbit directions: column v of the identity gives the tangent
// of s -> e^{-sv} p e^{sv}, expressed in frame coordinates.
Eigen::MatrixXd orbit_matrix(const RepTuple& p, const Frame& frame) {
  Eigen::MatrixXd O(frame.dim, 3);
  for (int k = 0; k < 3; ++k) {
    Eigen::Vector3d v = Eigen::Vector3d::Unit(k);
    TangentVector t = TangentVector::zero(p);
    for (std::size_t i = 0; i < p.A.size(); ++i) {
      AlgebraVector av = from_eigen(v);
      t.a[i] = av - adjoint(inverse(p.A[i]), av);
      t.b[i] = av - adjoint(inverse(p.B[i]), av);
    }
    for (std::size_t j = 0; j < p.C.size(); ++j) {
      AlgebraVector av = from_eigen(v);
      t.c[j] = av - adjoint(inverse(p.C[j]), av);
    }
    O.col(k) = coords_from_tangent(p, frame, t);
  }
  return O;
}

double residual_norm_or_pi(const RepTuple& p) {
  try {
    return to_eigen(log_group(mu_eval(p))).norm();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::AntipodalLog) return M_PI;
    throw;
  }
}

// Internal Gauss-Newton; returns false with the final residual instead of
// throwing, so the probe can report best-effort results.
bool try_solve(const RepTuple& initial, const VerifyConfig& vc, RepTuple* out,
               double* final_residual) {
  RepTuple p = initial;
  std::mt19937_64 jitter_rng(vc.seed ^ 0x517cc1b727220a95ULL);
  Frame frame = build_frame(p);
  double rn = residual_norm_or_pi(p);
  if (frame.dim == 0 || vc.fiber_tol <= 0) {
    *out = p;
    *final_residual = rn;
    return rn < vc.fiber_tol;
  }
  for (int iter = 0; iter < vc.max_iterations; ++iter) {
    if (rn < vc.fiber_tol) {
      *out = p;
      *final_residual = rn;
      return true;
    }
    Eigen::Vector3d r;
    try {
      r = to_eigen(log_group(mu_eval(p)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::AntipodalLog) throw;
      // The antipode has no principal log; restart from a nearby point.
      Eigen::VectorXd dx(frame.dim);
      std::normal_distribution<double> gauss(0.0, 1e-2);
      for (int k = 0; k < frame.dim; ++k) dx(k) = gauss(jitter_rng);
      p = move_tuple(p, tangent_from_coords(p, frame, dx), 1.0);
      frame = build_frame(p);
      rn = residual_norm_or_pi(p);
      continue;
    }
    Eigen::MatrixXd J = dmu_matrix(p, frame);
    Eigen::Matrix3d JJt = J * J.transpose();
    double lambda = 1e-12 * std::max(1.0, JJt.trace());
    Eigen::Vector3d y =
        (JJt + lambda * Eigen::Matrix3d::Identity()).ldlt().solve(-r);
    Eigen::VectorXd dx = J.transpose() * y;
    bool accepted = false;
    double s = 1.0;
    for (int bt = 0; bt < 40; ++bt) {
      RepTuple cand = move_tuple(p, tangent_from_coords(p, frame, dx), s);
      double cn = residual_norm_or_pi(cand);
      if (cn < rn * (1 - 1e-4 * s) || cn < vc.fiber_tol) {
        p = cand;
        rn = cn;
        frame = build_frame(p);
        accepted = true;
        break;
      }
      s *= 0.5;
    }
    if (!accepted) {
      // Stuck (typically an irregular configuration); jitter once.
      Eigen::VectorXd dx2(frame.dim);
      std::normal_distribution<double> gauss(0.0, 1e-3);
      for (int k = 0; k < frame.dim; ++k) dx2(k) = gauss(jitter_rng);
      RepTuple cand = move_tuple(p, tangent_from_coords(p, frame, dx2), 1.0);
      double cn = residual_norm_or_pi(cand);
      if (cn >= rn) {
        *out = p;
        *final_residual = rn;
        return false;
      }
      p = cand;
      rn = cn;
      frame = build_frame(p);
    }
  }
  *out = p;
  *final_residual = rn;
  return rn < vc.fiber_tol;
}

}  // namespace

TangentVector TangentVector::zero(const RepTuple& p) {
  TangentVector v;
  v.a.assign(p.A.size(), AlgebraVector{});
  v.b.assign(p.B.size(), AlgebraVector{});
  v.c.assign(p.C.size(), AlgebraVector{});
  return v;
}

SU2Element mu_eval(const RepTuple& p) {
  SU2Element result = SU2Element::identity();
  for (std::size_t i = 0; i < p.A.size(); ++i)
    result = multiply(result, commutator(p.A[i], p.B[i]));
  for (const auto& c : p.C) result = multiply(result, c);
  return result;
}

double mu_residual(const RepTuple& p) { return residual_norm_or_pi(p); }

AlgebraVector dmu_apply(const RepTuple& p, const TangentVector& v) {
  std::size_t g = p.A.size();
  std::size_t n = p.C.size();
  // Suffix products prod_{l>j} C_l and prod_{k>i}[A_k,B_k] prod_j C_j.
  std::vector<SU2Element> c_tail(n + 1);
  c_tail[n] = SU2Element::identity();
  for (std::size_t j = n; j > 0; --j)
    c_tail[j - 1] = multiply(p.C[j - 1], c_tail[j]);
  std::vector<SU2Element> comm_tail(g + 1);
  comm_tail[g] = c_tail[0];
  for (std::size_t i = g; i > 0; --i)
    comm_tail[i - 1] =
        multiply(commutator(p.A[i - 1], p.B[i - 1]), comm_tail[i]);

  AlgebraVector result{};
  for (std::size_t i = 0; i < g; ++i) {
    AlgebraVector inner = adjoint(inverse(p.B[i]), v.a[i]) - v.a[i] + v.b[i] -
                          adjoint(inverse(p.A[i]), v.b[i]);
    AlgebraVector term = adjoint(multiply(p.B[i], p.A[i]), inner);
    result = result + adjoint(inverse(comm_tail[i + 1]), term);
  }
  for (std::size_t j = 0; j < n; ++j)
    result = result + adjoint(inverse(c_tail[j + 1]), v.c[j]);
  return result;
}

AlgebraVector dmu_finite_difference(const RepTuple& p, const TangentVector& v,
                                    double step) {
  SU2Element base_inv = inverse(mu_eval(p));
  SU2Element plus = mu_eval(move_tuple(p, v, step));
  SU2Element minus = mu_eval(move_tuple(p, v, -step));
  AlgebraVector lp = log_group(multiply(base_inv, plus));
  AlgebraVector lm = log_group(multiply(base_inv, minus));
  return (lp - lm) * (1.0 / (2.0 * step));
}

Eigen::Matrix3d class_tangent_map(const SU2Element& C) {
  Eigen::Matrix3d M;
  SU2Element ci = inverse(C);
  for (int k = 0; k < 3; ++k) {
    AlgebraVector e{k == 0 ? 1.0 : 0.0, k == 1 ? 1.0 : 0.0, k == 2 ? 1.0 : 0.0};
    AlgebraVector col = e - adjoint(ci, e);
    M.col(k) = to_eigen(col);
  }
  return M;
}

RepTuple move_tuple(const RepTuple& p, const TangentVector& v, double scale) {
  RepTuple q = p;
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    q.A[i] = multiply(p.A[i], exp_algebra(v.a[i] * scale));
    q.B[i] = multiply(p.B[i], exp_algebra(v.b[i] * scale));
  }
  for (std::size_t j = 0; j < p.C.size(); ++j) {
    if (v.c[j].norm() == 0) continue;
    // Minimal-norm conjugator d with (1 - Ad_C^{-1}) d = c; the curve
    // e^{-sd} C e^{sd} stays in the class exactly.
    Eigen::Matrix3d M = class_tangent_map(p.C[j]);
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(
        M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    svd.setThreshold(1e-10);
    Eigen::Vector3d d = svd.solve(to_eigen(v.c[j]));
    SU2Element e = exp_algebra(from_eigen(d) * scale);
    q.C[j] = multiply(multiply(inverse(e), p.C[j]), e);
  }
  return q;
}

int rank_dmu(const RepTuple& p, double rel_threshold) {
  Frame frame = build_frame(p);
  if (frame.dim == 0) return 0;
  Eigen::MatrixXd J = dmu_matrix(p, frame);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
  const auto& sigma = svd.singularValues();
  double smax = sigma(0);
  if (smax == 0) return 0;
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i)
    if (sigma(i) > rel_threshold * smax) ++rank;
  return rank;
}

RepTuple solve_to_fiber(const RepTuple& initial, const VerifyConfig& vc) {
  RepTuple out;
  double residual = 0;
  if (try_solve(initial, vc, &out, &residual)) return out;
  std::ostringstream os;
  os << "Gauss-Newton did not reach the fiber: final residual " << residual
     << " (tolerance " << vc.fiber_tol << ")";
  throw Error(ErrorCode::NoConvergence, os.str());
}

RepTuple random_tuple(const WeightConfig& cfg, std::mt19937_64& rng) {
  if (cfg.mode == WeightMode::Raw)
    throw Error(ErrorCode::NotNormalized, "normalize the configuration first");
  RepTuple p;
  p.cfg = cfg;
  for (int i = 0; i < cfg.genus; ++i) {
    p.A.push_back(haar_sample(rng));
    p.B.push_back(haar_sample(rng));
  }
  for (std::size_t j = 0; j < cfg.punctures(); ++j)
    p.C.push_back(class_element(cfg.t[j], haar_sample(rng)));
  return p;
}

RepTuple random_fiber_point(const WeightConfig& cfg, const VerifyConfig& vc,
                            std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 10; ++attempt) {
    RepTuple out;
    double residual = 0;
    if (try_solve(random_tuple(cfg, rng), vc, &out, &residual)) return out;
  }
  throw Error(ErrorCode::NoConvergence,
              "no fiber point found in 10 multi-start attempts");
}

RepTuple critical_tuple(const WeightConfig& cfg, std::uint32_t J, int lift) {
  auto reg = is_regular(cfg);
  if (!reg.regular)
    throw Error(ErrorCode::IrregularWeights,
                "critical tuples require regular weights; witness J = " +
                    subset_to_string(reg.witness));
  if (cfg.genus < 1)
    throw Error(ErrorCode::GenusZero, "critical tuples require genus >= 1");
  if (lift != 0 && lift != 1)
    throw Error(ErrorCode::InvalidArgument, "lift must be 0 or 1");
  RepTuple p;
  p.cfg = cfg;
  for (int i = 0; i + 1 < cfg.genus; ++i) {
    p.A.push_back(SU2Element::identity());
    p.B.push_back(SU2Element::identity());
  }
  Rational kap = kappa(cfg, J).value + lift;
  double theta = M_PI * to_double(kap);
  p.A.push_back(SU2Element{std::cos(theta), -std::sin(theta), 0, 0});
  p.B.push_back(SU2Element::basis_j());
  for (std::size_t j = 0; j < cfg.punctures(); ++j) {
    double a = M_PI * to_double(cfg.t[j]);
    double sign = (J & (1u << j)) ? 1.0 : -1.0;
    p.C.push_back(SU2Element{std::cos(a), sign * std::sin(a), 0, 0});
  }
  return p;
}

HessianReport hessian_index(const RepTuple& p, const VerifyConfig& vc,
                            int expected_nullity) {
  Frame frame = build_frame(p);
  int m = frame.dim;
  Eigen::MatrixXd J = dmu_matrix(p, frame);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  if (sigma.size() < 3 || sigma(2) <= 1e-8 * sigma(0))
    throw Error(ErrorCode::SliceDimensionMismatch,
                "derivative is rank-deficient at the critical tuple");
  Eigen::MatrixXd kernel = svd.matrixV().rightCols(m - 3);

  Eigen::MatrixXd orbit = kernel.transpose() * orbit_matrix(p, frame);
  Eigen::JacobiSVD<Eigen::MatrixXd> osvd(orbit, Eigen::ComputeFullU);
  const auto& osigma = osvd.singularValues();
  if (osigma.size() < 3 || osigma(2) <= 1e-8 * osigma(0))
    throw Error(ErrorCode::SliceDimensionMismatch,
                "conjugation orbit is not 3-dimensional (nontrivial "
                "stabilizer?)");
  Eigen::MatrixXd slice = kernel * osvd.matrixU().rightCols(m - 6);

  int slice_dim = static_cast<int>(slice.cols());
  if (slice_dim != dimension(p.cfg)) {
    std::ostringstream os;
    os << "slice dimension " << slice_dim << " != dim M = "
       << dimension(p.cfg);
    throw Error(ErrorCode::SliceDimensionMismatch, os.str());
  }

  VerifyConfig project = vc;
  project.fiber_tol = vc.hessian_fiber_tol;
  double h = vc.hessian_step;
  double f0 = half_trace(p.A.back());
  auto f_at = [&](const Eigen::VectorXd& u, double sign) {
    TangentVector t = tangent_from_coords(p, frame, slice * u);
    RepTuple projected = solve_to_fiber(move_tuple(p, t, sign * h), project);
    return half_trace(projected.A.back());
  };
  auto quad = [&](const Eigen::VectorXd& u) {
    return (f_at(u, 1.0) - 2 * f0 + f_at(u, -1.0)) / (h * h);
  };

  Eigen::MatrixXd H(slice_dim, slice_dim);
  for (int i = 0; i < slice_dim; ++i)
    H(i, i) = quad(Eigen::VectorXd::Unit(slice_dim, i));
  for (int i = 0; i < slice_dim; ++i) {
    for (int j = i + 1; j < slice_dim; ++j) {
      Eigen::VectorXd plus = Eigen::VectorXd::Unit(slice_dim, i) +
                             Eigen::VectorXd::Unit(slice_dim, j);
      Eigen::VectorXd minus = Eigen::VectorXd::Unit(slice_dim, i) -
                              Eigen::VectorXd::Unit(slice_dim, j);
      H(i, j) = H(j, i) = (quad(plus) - quad(minus)) / 4.0;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(H);
  HessianReport report;
  report.slice_dim = slice_dim;
  double max_abs = 0;
  for (int i = 0; i < slice_dim; ++i)
    max_abs = std::max(max_abs, std::abs(eig.eigenvalues()(i)));
  report.threshold = vc.eig_rel_threshold * max_abs;
  for (int i = 0; i < slice_dim; ++i) {
    double lambda = eig.eigenvalues()(i);
    report.spectrum.push_back(lambda);
    if (lambda < -report.threshold)
      ++report.index;
    else if (lambda <= report.threshold)
      ++report.nullity;
    else
      ++report.positive;
  }
  if (expected_nullity >= 0 && report.nullity != expected_nullity) {
    std::ostringstream os;
    os << "Hessian nullity " << report.nullity << " != expected "
       << expected_nullity << " (threshold " << report.threshold << ")";
    throw Error(ErrorCode::DegenerateHessian, os.str());
  }
  return report;
}

SU2Element phi_from(const SU2Element& A_g, double theta) {
  AlgebraVector im = A_g.imaginary();
  double im_norm = im.norm();
  if (im_norm < 1e-12)
    throw Error(ErrorCode::ActionUndefined,
                "the U(1)-action does not extend over A_g = +-I");
  AlgebraVector axis = im * (1.0 / im_norm);
  return exp_algebra(axis * theta);
}

RepTuple u1_action(const RepTuple& p, double theta) {
  RepTuple q = p;
  SU2Element phi = phi_from(p.A.back(), theta);
  q.B.back() = multiply(p.B.back(), phi);
  return q;
}

RepTuple half_twist(const RepTuple& p) {
  RepTuple q = p;
  const SU2Element& A = p.A.back();
  const SU2Element& B = p.B.back();
  q.A.back() = multiply(commutator(A, B), inverse(A));
  q.B.back() = multiply(multiply(A, inverse(B)), inverse(A));
  return q;
}

RepTuple sign_action(const std::vector<int>& delta,
                     const std::vector<int>& epsilon, const RepTuple& p) {
  if (delta.size() != p.A.size() || epsilon.size() != p.B.size())
    throw Error(ErrorCode::InvalidArgument, "sign vectors must have length g");
  RepTuple q = p;
  for (std::size_t i = 0; i < p.A.size(); ++i) {
    if (delta[i] % 2) q.A[i] = -q.A[i];
    if (epsilon[i] % 2) q.B[i] = -q.B[i];
  }
  return q;
}

std::vector<double> conjugacy_fingerprint(const RepTuple& p) {
  std::vector<double> fp;
  const SU2Element& A = p.A.back();
  const SU2Element& B = p.B.back();
  fp.push_back(half_trace(A));
  fp.push_back(half_trace(B));
  fp.push_back(half_trace(multiply(A, B)));
  for (const auto& c : p.C) fp.push_back(half_trace(c));
  for (const auto& c : p.C) fp.push_back(half_trace(multiply(A, c)));
  return fp;
}

ProbeResult nonempty_probe(const WeightConfig& cfg, const VerifyConfig& vc) {
  if (cfg.genus != 0)
    throw Error(ErrorCode::InvalidArgument, "the probe is for genus 0 only");
  if (cfg.mode == WeightMode::Raw)
    throw Error(ErrorCode::NotNormalized, "normalize the configuration first");
  ProbeResult result;
  result.best_residual = M_PI;
  std::mt19937_64 rng(vc.seed);
  if (cfg.punctures() == 0) {
    // The empty product is I; the moduli space is a point.
    result.found = true;
    result.witness.cfg = cfg;
    result.best_residual = 0;
    return result;
  }
  for (int start = 0; start < vc.probe_starts; ++start) {
    ++result.starts;
    RepTuple out;
    double residual = 0;
    if (try_solve(random_tuple(cfg, rng), vc, &out, &residual)) {
      result.found = true;
      result.witness = out;
      result.best_residual = residual;
      return result;
    }
    result.best_residual = std::min(result.best_residual, residual);
  }
  return result;
}

TorusCensusResult torus_census(const WeightConfig& cfg,
                               const VerifyConfig& vc) {
  if (cfg.mode != WeightMode::Parabolic)
    throw Error(ErrorCode::InvalidArgument,
                "the torus census is for parabolic configurations");
  if (cfg.genus < 1)
    throw Error(ErrorCode::GenusZero, "the census requires genus >= 1");
  std::size_t n = cfg.punctures();
  std::uint32_t count = 1u << n;

  struct Raw {
    std::uint32_t subset;
    int lift;
    RepTuple tuple;
    std::vector<double> fp;
  };
  std::vector<Raw> raws;
  for (std::uint32_t J = 0; J < count; ++J) {
    for (int lift = 0; lift < 2; ++lift) {
      RepTuple p = critical_tuple(cfg, J, lift);
      double residual = mu_residual(p);
      if (residual > vc.critical_residual_tol) {
        std::ostringstream os;
        os << "critical tuple (J = " << subset_to_string(J) << ", lift "
           << lift << ") has mu-residual " << residual;
        throw Error(ErrorCode::CensusMismatch, os.str());
      }
      std::vector<double> fp = conjugacy_fingerprint(p);
      std::vector<double> fp_rot = conjugacy_fingerprint(u1_action(p, 0.7));
      for (std::size_t k = 0; k < fp.size(); ++k)
        if (std::abs(fp[k] - fp_rot[k]) > vc.fingerprint_tol)
          throw Error(ErrorCode::CensusMismatch,
                      "critical tuple is not fixed by the U(1)-action");
      raws.push_back({J, lift, std::move(p), std::move(fp)});
    }
  }

  TorusCensusResult result;
  auto same_class = [&](const std::vector<double>& a,
                        const std::vector<double>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (std::abs(a[k] - b[k]) > vc.fingerprint_tol) return false;
    return true;
  };
  std::vector<std::vector<double>> reps;
  for (const auto& raw : raws) {
    bool placed = false;
    for (std::size_t cl = 0; cl < reps.size(); ++cl) {
      if (same_class(reps[cl], raw.fp)) {
        result.classes[cl].members.push_back({raw.subset, raw.lift});
        placed = true;
        break;
      }
    }
    if (placed) continue;
    reps.push_back(raw.fp);
    CensusEntry entry;
    entry.f_value = half_trace(raw.tuple.A.back());
    entry.hessian = hessian_index(raw.tuple, vc);
    entry.members.push_back({raw.subset, raw.lift});
    result.classes.push_back(std::move(entry));
  }

  if (result.classes.size() != count) {
    std::ostringstream os;
    os << "found " << result.classes.size()
       << " conjugacy classes of critical tuples, expected 2^n = " << count;
    throw Error(ErrorCode::CensusMismatch, os.str());
  }

  for (const auto& entry : result.classes)
    result.measured_indices.push_back(entry.hessian.index);
  for (std::uint32_t J = 0; J < count; ++J)
    result.formula_indices.push_back(torus_index(cfg, J));
  std::sort(result.measured_indices.begin(), result.measured_indices.end());
  std::sort(result.formula_indices.begin(), result.formula_indices.end());
  if (result.measured_indices != result.formula_indices) {
    std::ostringstream os;
    os << "Hessian index multiset differs from the closed formula: measured";
    for (int i : result.measured_indices) os << " " << i;
    os << ", formula";
    for (int i : result.formula_indices) os << " " << i;
    throw Error(ErrorCode::CensusMismatch, os.str());
  }
  return result;
}

}  // namespace flatmorse
