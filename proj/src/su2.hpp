#ifndef FLATMORSE_SU2_HPP
#define FLATMORSE_SU2_HPP

#include <random>

#include "error.hpp"
#include "rational.hpp"

namespace flatmorse {

// Structural tolerances shared by the group arithmetic.
struct Su2Tolerances {
  double unit_norm = 1e-12;   // |q| - 1 after any renormalizing operation
  double round_trip = 1e-10;  // exp(log(q)) vs q
  double antipode = 1e-9;     // how close to w = -1 counts as the antipode
};

// An element of su(2), stored as the coefficients of x*i + y*j + z*k.
// The pairing <a,b> = -1/2 tr(ab) is the Euclidean dot product of these
// coefficient vectors.
struct AlgebraVector {
  double x = 0, y = 0, z = 0;

  AlgebraVector operator+(const AlgebraVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
  AlgebraVector operator-(const AlgebraVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
  AlgebraVector operator-() const { return {-x, -y, -z}; }
  AlgebraVector operator*(double s) const { return {x * s, y * s, z * s}; }

  double dot(const AlgebraVector& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const;
};

// A point of SU(2) as a unit quaternion q = w + x*i + y*j + z*k.
// The matrix identification is q <-> [[w+xi, y+zi], [-y+zi, w-xi]]; in
// particular diag(e^{i theta}, e^{-i theta}) <-> cos theta + sin theta * i
// and [[0,1],[-1,0]] <-> j.
struct SU2Element {
  double w = 1, x = 0, y = 0, z = 0;

  static SU2Element identity() { return {1, 0, 0, 0}; }
  static SU2Element basis_i() { return {0, 1, 0, 0}; }
  static SU2Element basis_j() { return {0, 0, 1, 0}; }
  static SU2Element basis_k() { return {0, 0, 0, 1}; }

  SU2Element operator-() const { return {-w, -x, -y, -z}; }

  double norm() const;
  AlgebraVector imaginary() const { return {x, y, z}; }
};

// Quaternion product, renormalized to keep long products from drifting.
SU2Element multiply(const SU2Element& p, const SU2Element& q);

SU2Element inverse(const SU2Element& q);

// a b a^-1 b^-1
SU2Element commutator(const SU2Element& a, const SU2Element& b);

// (1/2) tr q = w; conjugation-invariant.
double half_trace(const SU2Element& q);

// Ad_g v = g v g^-1, an isometry of su(2).
AlgebraVector adjoint(const SU2Element& g, const AlgebraVector& v);

SU2Element exp_algebra(const AlgebraVector& v);

// Principal logarithm, |result| in [0, pi). Throws Error(AntipodalLog)
// within tolerance of q = -I, which has no principal value.
AlgebraVector log_group(const SU2Element& q);

// Haar-uniform element: a normalized 4-vector of independent Gaussians.
SU2Element haar_sample(std::mt19937_64& rng);

// Representative g (cos(pi t) + sin(pi t) i) g^-1 of the conjugacy class
// with half-trace cos(pi t).
SU2Element class_element(const Rational& t, const SU2Element& conjugator);

// Componentwise max |p - q|.
double max_abs_diff(const SU2Element& p, const SU2Element& q);

}  // namespace flatmorse

#endif
