#include "diskemb/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diskemb/tolerances.hpp"

namespace diskemb {

namespace {

void require_positive_orthant(const Vec& v, const char* who) {
  for (double c : v) {
    if (!(c > 0.0)) {
      throw std::domain_error(std::string(who) +
                              ": coordinates must be strictly positive");
    }
  }
}

double mean(const Vec& v) {
  double s = 0.0;
  for (double c : v) s += c;
  return s / static_cast<double>(v.size());
}

void require_unit_center(const Vec& c, const char* who) {
  if (std::abs(norm(c) - 1.0) > tol::kMembership) {
    throw std::domain_error(std::string(who) +
                            ": disk center must lie on the unit sphere");
  }
}

}  // namespace

OrderEmbeddingMap::OrderEmbeddingMap(int n, double a) : n(n), a(a) {
  if (n < 2) throw std::invalid_argument("OrderEmbeddingMap: need n >= 2");
  if (!(a > 0.0)) throw std::invalid_argument("OrderEmbeddingMap: a must be positive");
}

std::vector<Vec> OrderEmbeddingMap::generators() const {
  std::vector<Vec> gens;
  gens.reserve(n);
  for (int k = 0; k < n; ++k) {
    Vec w(n, -1.0 / n);
    w[k] += 1.0;
    gens.push_back(std::move(w));
  }
  return gens;
}

Space OrderEmbeddingMap::disk_space() const {
  return Space::polyhedral_subspace(n, generators());
}

bool order_relation(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("order_relation: dimension mismatch");
  }
  require_positive_orthant(x, "order_relation");
  require_positive_orthant(y, "order_relation");
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] > y[k]) return false;
  }
  return true;
}

FormalDisk phi_ord(const OrderEmbeddingMap& map, const Vec& x) {
  if (static_cast<int>(x.size()) != map.n) {
    throw std::invalid_argument("phi_ord: dimension mismatch");
  }
  require_positive_orthant(x, "phi_ord");
  const double m = mean(x);
  Vec center(x);
  for (double& c : center) c -= m;
  return {std::move(center), map.a - m};
}

double energy_order(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("energy_order: dimension mismatch");
  }
  double e = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double v = x[k] - y[k];
    if (v > 0.0) e += v * v;
  }
  return e;
}

ConeParams::ConeParams(double K) : K(K) {
  if (!(K > 0.0)) throw std::invalid_argument("ConeParams: K must be positive");
  theta0 = std::atan(2.0 * K);
  // positive root of K·t² + t - K = 0, rationalized against cancellation
  r_min = 2.0 * K / (1.0 + std::sqrt(1.0 + 4.0 * K * K));
}

std::pair<double, double> cone_angles(const Vec& x, const Vec& y,
                                      const ConeParams& params) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("cone_angles: dimension mismatch");
  }
  const double nx = norm(x);
  const double ny = norm(y);
  if (nx == 0.0) {
    throw undefined_angle("cone_angles: cone axis undefined at the origin");
  }
  if (nx <= params.r_min) {
    throw std::domain_error("cone_angles: ‖x‖ at or below the cone floor r_min");
  }
  if (nx >= 1.0 || ny >= 1.0 || ny == 0.0) {
    throw std::domain_error(
        "cone_angles: points must lie in the open unit ball, y off the origin");
  }
  if (x == y) throw std::domain_error("cone_angles: coincident points");

  const double psi = std::asin(params.K * (1.0 - nx * nx) / nx);

  // hyperbolic triangle with vertices origin, x, y
  const double dx = 2.0 * std::atanh(nx);
  const double dy = 2.0 * std::atanh(ny);
  const double dxy = poincare_distance(x, y);
  if (dxy == 0.0) throw std::domain_error("cone_angles: coincident points");
  const double cos_origin = std::clamp(dot(x, y) / (nx * ny), -1.0, 1.0);
  const double origin_angle = std::acos(cos_origin);
  // law of sines fixes sin(xi); the law of cosines at x picks the branch
  const double sin_xi = std::sinh(dy) * std::sin(origin_angle) / std::sinh(dxy);
  const double cos_xi = (std::cosh(dy) - std::cosh(dx) * std::cosh(dxy)) /
                        (std::sinh(dx) * std::sinh(dxy));
  return {psi, std::atan2(sin_xi, cos_xi)};
}

FormalDisk phi_hyp(const Vec& x, const ConeParams& params) {
  if (x.size() < 2) throw std::invalid_argument("phi_hyp: need dimension >= 2");
  const double nx = norm(x);
  if (nx >= 1.0) throw std::domain_error("phi_hyp: point outside the open unit ball");
  if (nx < params.r_min) {
    throw std::domain_error("phi_hyp: ‖x‖ below the cone floor r_min");
  }
  // the argument is exactly 1 at ‖x‖ = r_min; clamp the rounding there
  const double arg = std::min(
      1.0, (1.0 + nx * nx) / (2.0 * nx) * std::sin(params.theta0));
  Vec center(x);
  for (double& c : center) c /= nx;
  return {std::move(center), std::asin(arg) - params.theta0};
}

double energy_hyp_closed_form(const FormalDisk& a, const FormalDisk& b,
                              const ConeParams& params) {
  if (a.center.size() != b.center.size()) {
    throw std::invalid_argument("energy_hyp_closed_form: dimension mismatch");
  }
  require_unit_center(a.center, "energy_hyp_closed_form");
  require_unit_center(b.center, "energy_hyp_closed_form");
  const double r_max = 3.141592653589793238462643383279502884 / 2.0 - params.theta0;
  for (double r : {a.radius, b.radius}) {
    if (!(r > 0.0) || r > r_max) {
      throw std::domain_error(
          "energy_hyp_closed_form: radius outside (0, pi/2 - theta0]");
    }
  }
  const double d =
      std::acos(std::clamp(dot(a.center, b.center), -1.0, 1.0));
  const double sin_t0 = std::sin(params.theta0);
  const double s_a = std::sin(a.radius + params.theta0) / sin_t0;
  const double s_b = std::sin(b.radius + params.theta0) / sin_t0;
  const double den =
      s_a * s_a + s_b * s_b - 2.0 * s_a * s_b * std::cos(d) - std::sin(d) * std::sin(d);
  if (!(den > 0.0)) {
    throw numeric_degeneracy(
        "energy_hyp_closed_form: vanishing denominator at r_a=" +
        std::to_string(a.radius) + " r_b=" + std::to_string(b.radius) +
        " d=" + std::to_string(d));
  }
  const double q =
      std::cos((a.radius + b.radius - d) / 2.0 + params.theta0) /
      (std::cos(params.theta0) * sin_t0) *
      std::sqrt(std::sin(a.radius) * std::sin(a.radius + 2.0 * params.theta0) / den);
  if (!std::isfinite(q)) {
    throw numeric_degeneracy("energy_hyp_closed_form: non-finite q at d=" +
                             std::to_string(d));
  }
  const double l = d - a.radius + b.radius;
  const double v =
      std::asin(std::clamp(q * 2.0 * std::sin(l / 2.0), -1.0, 1.0));
  return v > 0.0 ? v : 0.0;
}

double euclidean_cone_angle_diff(double r_x, double r_y, double d, double k) {
  if (!(k > 0.0) || k > 1.0) {
    throw std::domain_error("euclidean_cone_angle_diff: need 0 < K <= 1");
  }
  const double xi0 = std::asin(k);
  const double sigma_x = std::sin(r_x + xi0);
  const double sigma_y = std::sin(r_y + xi0);
  const double den2 =
      sigma_x * sigma_x + sigma_y * sigma_y - 2.0 * sigma_x * sigma_y * std::cos(d);
  if (!(den2 > 0.0)) {
    throw numeric_degeneracy(
        "euclidean_cone_angle_diff: vanishing denominator at r_x=" +
        std::to_string(r_x) + " r_y=" + std::to_string(r_y) +
        " d=" + std::to_string(d));
  }
  return 2.0 * sigma_x * std::sin((r_x - r_y - d) / 2.0) *
         std::cos((r_x + r_y - d) / 2.0 + xi0) / std::sqrt(den2);
}

}  // namespace diskemb
