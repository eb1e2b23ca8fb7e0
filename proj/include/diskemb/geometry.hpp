#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace diskemb {

using Vec = std::vector<double>;

enum class Geometry { euclidean, polyhedral, sphere, lorentz };

enum class Wrt { first, second };

// Distance gradient is undefined (coincident or antipodal points).
struct degenerate_gradient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A formula left its numerically meaningful domain (vanishing denominator).
struct numeric_degeneracy : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* geometry_name(Geometry g);
Geometry geometry_from_name(const std::string& name);

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
// -a0*b0 + sum_{k>=1} ak*bk
double minkowski_dot(const Vec& a, const Vec& b);

// Tests whether `target` is a nonnegative combination of `generators`
// (phase-1 simplex with Bland's rule; exact for the small dims used here).
bool conic_hull_contains(const std::vector<Vec>& generators, const Vec& target);

// A quasi-metric space description: geometry tag, ambient coordinate count,
// and generator set for the polyhedral case. Immutable after construction.
class Space {
 public:
  static Space euclidean(int dim);
  // Requires coni(W) = R^dim (every +-e_k reachable as a nonnegative
  // combination); rejects W otherwise.
  static Space polyhedral(int dim, std::vector<Vec> generators);
  // Variant for data confined to span(W): requires coni(W) = span(W),
  // i.e. -w is a nonnegative combination for every generator w.
  static Space polyhedral_subspace(int dim, std::vector<Vec> generators);
  // Unit (dim-1)-sphere embedded in R^dim; dim >= 2.
  static Space sphere(int dim);
  // Hyperboloid <x,x>_L = -1, x0 > 0, in R^dim; dim >= 2.
  static Space lorentz(int dim);

  Geometry kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::vector<Vec>& generators() const { return generators_; }
  bool is_metric() const { return kind_ != Geometry::polyhedral; }

  void check_point(const Vec& x) const;
  void check_tangent(const Vec& x, const Vec& v) const;

 private:
  Space(Geometry kind, int dim, std::vector<Vec> generators)
      : kind_(kind), dim_(dim), generators_(std::move(generators)) {}

  Geometry kind_;
  int dim_;
  std::vector<Vec> generators_;
};

double distance(const Space& space, const Vec& x, const Vec& y);
Vec distance_grad(const Space& space, const Vec& x, const Vec& y, Wrt wrt);
Vec exp_map(const Space& space, const Vec& x, const Vec& v);
Vec project_to_manifold(const Space& space, const Vec& p);
Vec tangent_project(const Space& space, const Vec& x, const Vec& g);

// Poincare-ball utilities used by the equivalence checks.
double poincare_distance(const Vec& x, const Vec& y);
// Mobius translation of x by y; maps the origin to y and is an isometry.
Vec poincare_translate(const Vec& x, const Vec& y);
Vec lorentz_to_poincare(const Vec& x);
Vec poincare_to_lorentz(const Vec& p);

}  // namespace diskemb
