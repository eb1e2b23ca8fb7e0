#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "diskemb/disks.hpp"
#include "diskemb/geometry.hpp"

namespace diskemb {

// The cone axis direction does not exist at the origin.
struct undefined_angle : std::domain_error {
  using std::domain_error::domain_error;
};

// Coordinatewise-order embeddings on the positive orthant viewed as formal
// disks on the zero-mean hyperplane: center P·x with P = I - (1/n)·1·1ᵀ,
// radius a - mean(x).
struct OrderEmbeddingMap {
  int n;
  double a;

  OrderEmbeddingMap(int n, double a);

  // W = {P·e_k}: columns of the mean-centering projector. They span only the
  // zero-sum hyperplane, so the matching space is the subspace variant.
  std::vector<Vec> generators() const;
  Space disk_space() const;
};

// True iff x_k <= y_k for every coordinate.
bool order_relation(const Vec& x, const Vec& y);

FormalDisk phi_ord(const OrderEmbeddingMap& map, const Vec& x);

// ‖h₊(x - y)‖² with the hinge applied coordinate-wise.
double energy_order(const Vec& x, const Vec& y);

// Cone constants: aperture floor theta0 = arctan(2K) and the smallest center
// norm r_min (positive root of K·t² + t - K = 0) at which the cone exists.
struct ConeParams {
  double K;
  double theta0;
  double r_min;

  explicit ConeParams(double K);
};

// (psi, xi): the generatrix half-angle of the cone at x and the axis-to-y
// angle at x, both from the hyperbolic triangle against the origin.
// xi ∈ [0, π]; y lies inside the cone of x iff xi <= psi.
std::pair<double, double> cone_angles(const Vec& x, const Vec& y,
                                      const ConeParams& params);

// Projects the cone at x onto the unit-sphere boundary: a spherical disk with
// center x/‖x‖ and radius arcsin(((1+‖x‖²)/(2‖x‖))·sin theta0) - theta0.
FormalDisk phi_hyp(const Vec& x, const ConeParams& params);

// Closed-form cone energy from disk data alone: h₊(arcsin(q·2·sin(l/2)))
// with l = d - r_a + r_b the spherical protrusion.
double energy_hyp_closed_form(const FormalDisk& a, const FormalDisk& b,
                              const ConeParams& params);

// sin(psi - xi) for flat cones with aperture floor xi0 = arcsin K, from disk
// radii and the center angle alone.
double euclidean_cone_angle_diff(double r_x, double r_y, double d, double k);

}  // namespace diskemb
