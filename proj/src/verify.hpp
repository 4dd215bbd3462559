#ifndef FLATMORSE_VERIFY_HPP
#define FLATMORSE_VERIFY_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <vector>

#include "su2.hpp"
#include "weights.hpp"

namespace flatmorse {

// Numerical defaults for the verification engine. The source results are
// exact, so these only control the solver and finite differences.
struct VerifyConfig {
  std::uint64_t seed = 7152002;
  double fiber_tol = 1e-10;             // solve_to_fiber convergence
  double critical_residual_tol = 1e-12; // closed-form critical tuples
  double fd_step = 1e-5;                // derivative finite differences
  double hessian_step = 1e-4;           // geodesic second differences
  double hessian_fiber_tol = 1e-12;     // projection during Hessian sampling
  double eig_rel_threshold = 1e-3;      // eigenvalue zero cut, relative
  double rank_rel_threshold = 1e-8;     // singular value cut for rank_dmu
  double fingerprint_tol = 1e-9;        // conjugacy fingerprint matching
  int max_iterations = 200;
  int probe_starts = 64;
  int samples = 100;
};

// A point (A_1,B_1,...,A_g,B_g,C_1,...,C_n) of the representation variety.
// In classic mode C holds the single frozen factor -I.
struct RepTuple {
  std::vector<SU2Element> A;
  std::vector<SU2Element> B;
  std::vector<SU2Element> C;
  WeightConfig cfg;
};

// Left-trivialized tangent data: a_i, b_i free in su(2); each c_j must lie
// in the tangent space of its conjugacy class, i.e. in the image of
// (1 - Ad_{C_j}^{-1}).
struct TangentVector {
  std::vector<AlgebraVector> a;
  std::vector<AlgebraVector> b;
  std::vector<AlgebraVector> c;

  static TangentVector zero(const RepTuple& p);
};

// (prod_i [A_i,B_i]) (prod_j C_j), left to right in index order.
SU2Element mu_eval(const RepTuple& p);

// |log mu|; pi at the antipode.
double mu_residual(const RepTuple& p);

// Left-trivialized derivative of mu, implemented term by term from the
// expanded product-rule formula.
AlgebraVector dmu_apply(const RepTuple& p, const TangentVector& v);

// Independent central-difference route: moves the tuple along v and
// differentiates log(mu(p)^-1 mu(p_s)). Never calls dmu_apply.
AlgebraVector dmu_finite_difference(const RepTuple& p, const TangentVector& v,
                                    double step);

// 3x3 matrix of (1 - Ad_C^{-1}) on su(2) coefficient vectors; its image is
// the left-trivialized tangent space of the conjugacy class of C.
Eigen::Matrix3d class_tangent_map(const SU2Element& C);

// Moves each A_i, B_i by a group exponential and each C_j inside its class
// by a conjugator exponential with the matching initial tangent, so class
// membership is exact by construction.
RepTuple move_tuple(const RepTuple& p, const TangentVector& v, double scale);

// Numerical rank of the 3 x (6g+2n) derivative by singular values.
int rank_dmu(const RepTuple& p, double rel_threshold);

// Gauss-Newton on the residual log(mu) over the product manifold. Throws
// Error(NoConvergence) with the final residual in the message.
RepTuple solve_to_fiber(const RepTuple& initial, const VerifyConfig& vc);

// Haar-random A_i, B_i and class elements C_j with Haar conjugators.
RepTuple random_tuple(const WeightConfig& cfg, std::mt19937_64& rng);

// Random point of the fiber mu^-1(I).
RepTuple random_fiber_point(const WeightConfig& cfg, const VerifyConfig& vc,
                            std::mt19937_64& rng);

// The closed-form U(1)-fixed tuple for subset J and kappa = kappa_J + lift:
// A_g = cos(pi kappa) - sin(pi kappa) i, B_g = j, everything else diagonal.
RepTuple critical_tuple(const WeightConfig& cfg, std::uint32_t J, int lift);

struct HessianReport {
  int index = 0;     // eigenvalues < -threshold
  int nullity = 0;   // |eigenvalue| <= threshold
  int positive = 0;
  int slice_dim = 0;
  double threshold = 0;
  std::vector<double> spectrum;  // sorted ascending
};

// Morse data of f = half_trace(A_g) on the slice
// ker(D mu) cap (conjugation-orbit directions)^perp at a critical tuple.
// Second derivatives are central differences of f along curves moved on the
// slice and projected back to the fiber. If expected_nullity >= 0 and the
// measured nullity differs, throws Error(DegenerateHessian).
HessianReport hessian_index(const RepTuple& p, const VerifyConfig& vc,
                            int expected_nullity = -1);

// lambda = e^{i theta} acting by B_g -> B_g phi(lambda), where phi is the
// one-parameter subgroup through A_g. Throws Error(ActionUndefined) at
// A_g = +-I.
RepTuple u1_action(const RepTuple& p, double theta);
SU2Element phi_from(const SU2Element& A_g, double theta);

// A_g -> A_g B_g A_g^-1 B_g^-1 A_g^-1, B_g -> A_g B_g^-1 A_g^-1.
RepTuple half_twist(const RepTuple& p);

// ((-1)^{delta_i} A_i, (-1)^{epsilon_i} B_i, C_j).
RepTuple sign_action(const std::vector<int>& delta,
                     const std::vector<int>& epsilon, const RepTuple& p);

// Conjugation-invariant trace fingerprint (A_g, B_g, A_g B_g, each C_j,
// each A_g C_j); equal fingerprints identify conjugate critical tuples.
std::vector<double> conjugacy_fingerprint(const RepTuple& p);

struct ProbeResult {
  bool found = false;
  RepTuple witness;
  double best_residual = 0;
  int starts = 0;
};

// Multi-start nonemptiness probe for M_{0,n}. A failure is reported as
// "probably empty", never as a certainty.
ProbeResult nonempty_probe(const WeightConfig& cfg, const VerifyConfig& vc);

struct CensusEntry {
  double f_value = 0;
  HessianReport hessian;
  std::vector<std::pair<std::uint32_t, int>> members;  // (J, lift) labels
};

struct TorusCensusResult {
  std::vector<CensusEntry> classes;
  std::vector<int> measured_indices;  // sorted
  std::vector<int> formula_indices;   // sorted, 2g+2n-2|J|+4*floor(kappa_J)
};

// Builds every (J, lift) tuple, deduplicates by conjugacy fingerprint,
// checks the class count against 2^n and the numerically measured Hessian
// index multiset against the closed formula. Throws Error(CensusMismatch)
// on either failure.
TorusCensusResult torus_census(const WeightConfig& cfg,
                               const VerifyConfig& vc);

}  // namespace flatmorse

#endif
