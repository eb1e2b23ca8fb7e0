#include "diskemb/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "diskemb/tolerances.hpp"

namespace diskemb {

namespace {

void check_finite(const Vec& v, const char* what) {
  for (double c : v) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
    }
  }
}

void check_dim(const Vec& v, int dim, const char* what) {
  if (static_cast<int>(v.size()) != dim) {
    throw std::invalid_argument(std::string(what) + ": expected " +
                                std::to_string(dim) + " coordinates, got " +
                                std::to_string(v.size()));
  }
}

double clamp(double v, double lo, double hi) {
  return std::min(std::max(v, lo), hi);
}

}  // namespace

const char* geometry_name(Geometry g) {
  switch (g) {
    case Geometry::euclidean: return "euclidean";
    case Geometry::polyhedral: return "polyhedral";
    case Geometry::sphere: return "sphere";
    case Geometry::lorentz: return "lorentz";
  }
  return "unknown";
}

Geometry geometry_from_name(const std::string& name) {
  if (name == "euclidean") return Geometry::euclidean;
  if (name == "polyhedral") return Geometry::polyhedral;
  if (name == "sphere") return Geometry::sphere;
  if (name == "lorentz") return Geometry::lorentz;
  throw std::invalid_argument("unknown geometry: " + name);
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

double minkowski_dot(const Vec& a, const Vec& b) {
  double s = -a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Phase-1 simplex: minimize the sum of artificial variables for
// { lambda >= 0 : G lambda = target }. Bland's rule guarantees termination.
bool conic_hull_contains(const std::vector<Vec>& generators, const Vec& target) {
  const int n = static_cast<int>(target.size());
  const int m = static_cast<int>(generators.size());
  const int cols = m + n + 1;  // lambdas, artificials, rhs
  std::vector<std::vector<double>> t(n + 1, std::vector<double>(cols, 0.0));
  std::vector<int> basis(n);
  for (int i = 0; i < n; ++i) {
    const double sign = target[i] >= 0.0 ? 1.0 : -1.0;
    for (int j = 0; j < m; ++j) t[i][j] = sign * generators[j][i];
    t[i][m + i] = 1.0;
    t[i][cols - 1] = sign * target[i];
    basis[i] = m + i;
  }
  // Objective row: reduced costs with the artificial basis in canonical form.
  for (int j = 0; j < cols; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += t[i][j];
    t[n][j] = (j >= m && j < m + n) ? 0.0 : -s;
  }
  const double eps = tol::kConicFeasibility;
  while (true) {
    int enter = -1;
    for (int j = 0; j < m + n; ++j) {
      if (t[n][j] < -eps) {
        enter = j;
        break;  // Bland: lowest index
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (t[i][enter] > eps) {
        const double ratio = t[i][cols - 1] / t[i][enter];
        if (ratio < best - 1e-15 ||
            (std::abs(ratio - best) <= 1e-15 && (leave < 0 || basis[i] < basis[leave]))) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) return false;  // unbounded ascent of an artificial: infeasible
    const double piv = t[leave][enter];
    for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (int i = 0; i <= n; ++i) {
      if (i == leave) continue;
      const double f = t[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return std::abs(t[n][cols - 1]) <= eps;
}

Space Space::euclidean(int dim) {
  if (dim < 1) throw std::invalid_argument("euclidean: dim must be >= 1");
  return Space(Geometry::euclidean, dim, {});
}

namespace {

void check_generators(int dim, const std::vector<Vec>& generators) {
  if (dim < 1) throw std::invalid_argument("polyhedral: dim must be >= 1");
  if (generators.empty()) {
    throw std::invalid_argument("polyhedral: generator set is empty");
  }
  for (const Vec& w : generators) {
    check_dim(w, dim, "polyhedral generator");
    check_finite(w, "polyhedral generator");
  }
}

}  // namespace

Space Space::polyhedral(int dim, std::vector<Vec> generators) {
  check_generators(dim, generators);
  for (int k = 0; k < dim; ++k) {
    for (double sign : {1.0, -1.0}) {
      Vec e(dim, 0.0);
      e[k] = sign;
      if (!conic_hull_contains(generators, e)) {
        throw std::invalid_argument(
            "polyhedral: conic hull of generators is not the whole space "
            "(direction " + std::string(sign > 0 ? "+" : "-") + "e_" +
            std::to_string(k) + " unreachable)");
      }
    }
  }
  return Space(Geometry::polyhedral, dim, std::move(generators));
}

Space Space::polyhedral_subspace(int dim, std::vector<Vec> generators) {
  check_generators(dim, generators);
  for (const Vec& w : generators) {
    Vec neg(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    if (!conic_hull_contains(generators, neg)) {
      throw std::invalid_argument(
          "polyhedral_subspace: conic hull of generators is not a linear "
          "subspace (some -w is unreachable)");
    }
  }
  return Space(Geometry::polyhedral, dim, std::move(generators));
}

Space Space::sphere(int dim) {
  if (dim < 2) throw std::invalid_argument("sphere: dim must be >= 2");
  return Space(Geometry::sphere, dim, {});
}

Space Space::lorentz(int dim) {
  if (dim < 2) throw std::invalid_argument("lorentz: dim must be >= 2");
  return Space(Geometry::lorentz, dim, {});
}

void Space::check_point(const Vec& x) const {
  check_dim(x, dim_, "point");
  check_finite(x, "point");
  switch (kind_) {
    case Geometry::euclidean:
    case Geometry::polyhedral:
      break;
    case Geometry::sphere:
      if (std::abs(norm(x) - 1.0) > tol::kMembership) {
        throw std::invalid_argument("point: not on the unit sphere");
      }
      break;
    case Geometry::lorentz:
      if (std::abs(minkowski_dot(x, x) + 1.0) > tol::kMembership || x[0] <= 0.0) {
        throw std::invalid_argument("point: not on the hyperboloid");
      }
      break;
  }
}

void Space::check_tangent(const Vec& x, const Vec& v) const {
  check_point(x);
  check_dim(v, dim_, "tangent");
  check_finite(v, "tangent");
  switch (kind_) {
    case Geometry::euclidean:
    case Geometry::polyhedral:
      break;
    case Geometry::sphere:
      if (std::abs(dot(x, v)) > tol::kMembership) {
        throw std::invalid_argument("tangent: not orthogonal to base point");
      }
      break;
    case Geometry::lorentz:
      if (std::abs(minkowski_dot(x, v)) > tol::kMembership) {
        throw std::invalid_argument("tangent: not Minkowski-orthogonal to base point");
      }
      break;
  }
}

double distance(const Space& space, const Vec& x, const Vec& y) {
  space.check_point(x);
  space.check_point(y);
  if (x == y) return 0.0;  // exact zero; acos/acosh would return ~1e-8 noise
  switch (space.kind()) {
    case Geometry::euclidean: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        s += d * d;
      }
      return std::sqrt(s);
    }
    case Geometry::polyhedral: {
      Vec diff(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
      double best = -std::numeric_limits<double>::infinity();
      for (const Vec& w : space.generators()) best = std::max(best, dot(w, diff));
      return best;
    }
    case Geometry::sphere:
      return std::acos(clamp(dot(x, y), -1.0, 1.0));
    case Geometry::lorentz:
      return std::acosh(std::max(-minkowski_dot(x, y), 1.0));
  }
  return 0.0;
}

Vec distance_grad(const Space& space, const Vec& x, const Vec& y, Wrt wrt) {
  space.check_point(x);
  space.check_point(y);
  const std::size_t n = x.size();
  switch (space.kind()) {
    case Geometry::euclidean: {
      Vec g(n);
      double d = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double c = x[i] - y[i];
        g[i] = c;
        d += c * c;
      }
      d = std::sqrt(d);
      if (d < tol::kTinyNorm) {
        throw degenerate_gradient("distance_grad: coincident points");
      }
      for (double& c : g) c /= (wrt == Wrt::first ? d : -d);
      return g;
    }
    case Geometry::polyhedral: {
      Vec diff(n);
      for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - y[i];
      std::size_t best = 0;
      double best_val = dot(space.generators()[0], diff);
      for (std::size_t j = 1; j < space.generators().size(); ++j) {
        const double v = dot(space.generators()[j], diff);
        if (v > best_val) {  // strict: ties keep the lowest index
          best_val = v;
          best = j;
        }
      }
      Vec g = space.generators()[best];
      if (wrt == Wrt::second) {
        for (double& c : g) c = -c;
      }
      return g;
    }
    case Geometry::sphere: {
      const Vec& at = (wrt == Wrt::first) ? x : y;
      const Vec& other = (wrt == Wrt::first) ? y : x;
      const double c = clamp(dot(x, y), -1.0, 1.0);
      Vec h(n);
      for (std::size_t i = 0; i < n; ++i) h[i] = other[i] - c * at[i];
      const double hn = norm(h);
      if (hn < tol::kTinyNorm) {
        throw degenerate_gradient("distance_grad: coincident or antipodal sphere points");
      }
      for (double& v : h) v /= -hn;
      return h;
    }
    case Geometry::lorentz: {
      const Vec& at = (wrt == Wrt::first) ? x : y;
      const Vec& other = (wrt == Wrt::first) ? y : x;
      const double c = minkowski_dot(x, y);
      Vec h(n);
      for (std::size_t i = 0; i < n; ++i) h[i] = other[i] + c * at[i];
      const double hn = std::sqrt(std::max(minkowski_dot(h, h), 0.0));
      if (hn < tol::kTinyNorm) {
        throw degenerate_gradient("distance_grad: coincident hyperboloid points");
      }
      for (double& v : h) v /= -hn;
      return h;
    }
  }
  return {};
}

Vec exp_map(const Space& space, const Vec& x, const Vec& v) {
  space.check_tangent(x, v);
  const std::size_t n = x.size();
  switch (space.kind()) {
    case Geometry::euclidean:
    case Geometry::polyhedral: {
      Vec out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + v[i];
      return out;
    }
    case Geometry::sphere: {
      const double nv = norm(v);
      if (nv < tol::kTinyNorm) return x;
      const double c = std::cos(nv), s = std::sin(nv) / nv;
      Vec out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = c * x[i] + s * v[i];
      return out;
    }
    case Geometry::lorentz: {
      const double nv = std::sqrt(std::max(minkowski_dot(v, v), 0.0));
      if (nv < tol::kTinyNorm) return x;
      const double c = std::cosh(nv), s = std::sinh(nv) / nv;
      Vec out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = c * x[i] + s * v[i];
      return out;
    }
  }
  return {};
}

Vec project_to_manifold(const Space& space, const Vec& p) {
  check_dim(p, space.dim(), "point");
  check_finite(p, "point");
  switch (space.kind()) {
    case Geometry::euclidean:
    case Geometry::polyhedral:
      return p;
    case Geometry::sphere: {
      const double n = norm(p);
      if (n < tol::kTinyNorm) {
        throw std::invalid_argument("project_to_manifold: zero vector has no direction");
      }
      // Points already within membership tolerance are fixed points, which
      // keeps repeated projection bitwise idempotent.
      if (std::abs(n - 1.0) <= tol::kMembership) return p;
      Vec out(p);
      for (double& c : out) c /= n;
      return out;
    }
    case Geometry::lorentz: {
      double s = 0.0;
      for (std::size_t i = 1; i < p.size(); ++i) s += p[i] * p[i];
      Vec out(p);
      out[0] = std::sqrt(1.0 + s);
      return out;
    }
  }
  return {};
}

Vec tangent_project(const Space& space, const Vec& x, const Vec& g) {
  space.check_point(x);
  check_dim(g, space.dim(), "vector");
  check_finite(g, "vector");
  switch (space.kind()) {
    case Geometry::euclidean:
    case Geometry::polyhedral:
      return g;
    case Geometry::sphere: {
      const double c = dot(x, g);
      Vec out(g);
      for (std::size_t i = 0; i < g.size(); ++i) out[i] -= c * x[i];
      return out;
    }
    case Geometry::lorentz: {
      const double c = minkowski_dot(x, g);
      Vec out(g);
      for (std::size_t i = 0; i < g.size(); ++i) out[i] += c * x[i];
      return out;
    }
  }
  return {};
}

namespace {

void check_ball(const Vec& x, const char* what) {
  check_finite(x, what);
  if (norm(x) >= 1.0) {
    throw std::domain_error(std::string(what) + ": norm must be < 1");
  }
}

}  // namespace

double poincare_distance(const Vec& x, const Vec& y) {
  check_ball(x, "poincare point");
  check_ball(y, "poincare point");
  if (x.size() != y.size()) {
    throw std::invalid_argument("poincare_distance: dimension mismatch");
  }
  double d2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    d2 += d * d;
  }
  const double nx = dot(x, x), ny = dot(y, y);
  return std::acosh(1.0 + 2.0 * d2 / ((1.0 - nx) * (1.0 - ny)));
}

Vec poincare_translate(const Vec& x, const Vec& y) {
  check_ball(x, "poincare point");
  check_ball(y, "poincare point");
  if (x.size() != y.size()) {
    throw std::invalid_argument("poincare_translate: dimension mismatch");
  }
  const double xx = dot(x, x), yy = dot(y, y), xy = dot(x, y);
  const double a = 1.0 + 2.0 * xy + xx;
  const double den = 1.0 + 2.0 * xy + xx * yy;
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = ((1.0 - yy) * x[i] + a * y[i]) / den;
  }
  return out;
}

Vec lorentz_to_poincare(const Vec& x) {
  if (x.size() < 2) throw std::invalid_argument("lorentz_to_poincare: need >= 2 coordinates");
  check_finite(x, "lorentz point");
  if (std::abs(minkowski_dot(x, x) + 1.0) > tol::kMembership || x[0] <= 0.0) {
    throw std::invalid_argument("lorentz_to_poincare: not on the hyperboloid");
  }
  Vec p(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) p[i - 1] = x[i] / (1.0 + x[0]);
  return p;
}

Vec poincare_to_lorentz(const Vec& p) {
  check_ball(p, "poincare point");
  const double n2 = dot(p, p);
  const double f = 1.0 - n2;
  Vec x(p.size() + 1);
  x[0] = (1.0 + n2) / f;
  for (std::size_t i = 0; i < p.size(); ++i) x[i + 1] = 2.0 * p[i] / f;
  return x;
}

}  // namespace diskemb
