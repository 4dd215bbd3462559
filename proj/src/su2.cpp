#include "su2.hpp"

#include <algorithm>
#include <cmath>

namespace flatmorse {

double AlgebraVector::norm() const { return std::sqrt(dot(*this)); }

double SU2Element::norm() const {
  return std::sqrt(w * w + x * x + y * y + z * z);
}

namespace {

SU2Element renormalize(SU2Element q) {
  double n = q.norm();
  q.w /= n;
  q.x /= n;
  q.y /= n;
  q.z /= n;
  return q;
}

}  // namespace

SU2Element multiply(const SU2Element& p, const SU2Element& q) {
  SU2Element r;
  r.w = p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z;
  r.x = p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y;
  r.y = p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x;
  r.z = p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w;
  return renormalize(r);
}

SU2Element inverse(const SU2Element& q) { return {q.w, -q.x, -q.y, -q.z}; }

SU2Element commutator(const SU2Element& a, const SU2Element& b) {
  return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

double half_trace(const SU2Element& q) { return q.w; }

AlgebraVector adjoint(const SU2Element& g, const AlgebraVector& v) {
  SU2Element vq{0, v.x, v.y, v.z};
  // g v g^-1 without the unit renormalization (v is not a group element).
  const SU2Element& p = g;
  SU2Element t;
  t.w = -p.x * vq.x - p.y * vq.y - p.z * vq.z;
  t.x = p.w * vq.x + p.y * vq.z - p.z * vq.y;
  t.y = p.w * vq.y - p.x * vq.z + p.z * vq.x;
  t.z = p.w * vq.z + p.x * vq.y - p.y * vq.x;
  SU2Element gi = inverse(g);
  SU2Element r;
  r.x = t.w * gi.x + t.x * gi.w + t.y * gi.z - t.z * gi.y;
  r.y = t.w * gi.y - t.x * gi.z + t.y * gi.w + t.z * gi.x;
  r.z = t.w * gi.z + t.x * gi.y - t.y * gi.x + t.z * gi.w;
  return {r.x, r.y, r.z};
}

SU2Element exp_algebra(const AlgebraVector& v) {
  double theta = v.norm();
  if (theta < 1e-14) {
    // sin(theta)/theta -> 1; second-order series keeps unit norm.
    SU2Element q{1 - theta * theta / 2, v.x, v.y, v.z};
    return renormalize(q);
  }
  double s = std::sin(theta) / theta;
  return renormalize({std::cos(theta), v.x * s, v.y * s, v.z * s});
}

AlgebraVector log_group(const SU2Element& q) {
  static const Su2Tolerances tol;
  if (q.w < -1.0 + tol.antipode)
    throw Error(ErrorCode::AntipodalLog,
                "log has no principal value at the antipode -I");
  double im = q.imaginary().norm();
  double w = std::clamp(q.w, -1.0, 1.0);
  double theta = std::atan2(im, w);
  if (im < 1e-14) return q.imaginary();  // theta/im -> 1 near the identity
  double s = theta / im;
  return {q.x * s, q.y * s, q.z * s};
}

SU2Element haar_sample(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  SU2Element q;
  do {
    q = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
  } while (q.norm() < 1e-6);
  return renormalize(q);
}

SU2Element class_element(const Rational& t, const SU2Element& conjugator) {
  double angle = M_PI * to_double(t);
  SU2Element base{std::cos(angle), std::sin(angle), 0, 0};
  return multiply(multiply(conjugator, base), inverse(conjugator));
}

double max_abs_diff(const SU2Element& p, const SU2Element& q) {
  return std::max({std::abs(p.w - q.w), std::abs(p.x - q.x),
                   std::abs(p.y - q.y), std::abs(p.z - q.z)});
}

}  // namespace flatmorse
