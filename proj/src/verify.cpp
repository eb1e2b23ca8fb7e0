#include "diskemb/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>
#include <utility>

#include "diskemb/disks.hpp"
#include "diskemb/equivalence.hpp"
#include "diskemb/geometry.hpp"
#include "diskemb/rng.hpp"

namespace diskemb {

namespace {

const double kPi = std::acos(-1.0);

Vec random_point(const Space& s, Rng& rng, double scale = 1.0) {
  const int n = s.dim();
  switch (s.kind()) {
    case Geometry::euclidean:
    case Geometry::polyhedral: {
      Vec p(n);
      for (double& c : p) c = rng.uniform(-scale, scale);
      return p;
    }
    case Geometry::sphere: {
      Vec p(n);
      for (double& c : p) c = rng.normal();
      return project_to_manifold(s, p);
    }
    case Geometry::lorentz: {
      Vec p(n, 0.0);
      p[0] = 1.0;
      for (int i = 1; i < n; ++i) p[i] = scale * rng.normal();
      return project_to_manifold(s, p);
    }
  }
  return {};
}

FormalDisk random_disk(const Space& s, Rng& rng) {
  return {random_point(s, rng), rng.uniform(-1.0, 1.0)};
}

Vec random_tangent(const Space& s, const Vec& x, Rng& rng) {
  Vec g(s.dim());
  for (double& c : g) c = rng.normal();
  return tangent_project(s, x, g);
}

std::vector<Space> all_spaces() {
  return {Space::euclidean(3),
          Space::polyhedral(2, {{2, 0}, {-1, 0}, {0, 1}, {0, -1}}),
          Space::sphere(3), Space::lorentz(3)};
}

double riemannian_dot(const Space& s, const Vec& a, const Vec& b) {
  return s.kind() == Geometry::lorentz ? minkowski_dot(a, b) : dot(a, b);
}

Vec orthant_point(int n, Rng& rng) {
  Vec x(n);
  for (double& c : x) c = rng.uniform(0.01, 3.0);
  return x;
}

double max_coordinate_gap(const Vec& x, const Vec& y) {
  double m = x[0] - y[0];
  for (std::size_t k = 1; k < x.size(); ++k) m = std::max(m, x[k] - y[k]);
  return m;
}

Vec annulus_point(int n, double lo, double hi, Rng& rng) {
  Vec x(n);
  double nn = 0.0;
  do {
    nn = 0.0;
    for (double& c : x) {
      c = rng.normal();
      nn += c * c;
    }
  } while (nn == 0.0);
  const double target = rng.uniform(lo, hi);
  const double scale = target / std::sqrt(nn);
  for (double& c : x) c *= scale;
  return x;
}

// Independent flat-cone construction: apexes placed in the plane from the
// aperture relations, axis-to-target angle read off the triangle.
double planar_cone_oracle(double r_x, double r_y, double big_d, double k) {
  const double xi0 = std::asin(k);
  const double psi_x = r_x + xi0;
  const double psi_y = r_y + xi0;
  const double ax = k / std::sin(psi_x);
  const double ay = k / std::sin(psi_y);
  const double dxy =
      std::sqrt(ax * ax + ay * ay - 2.0 * ax * ay * std::cos(big_d));
  const double sin_xi = ay * std::sin(big_d) / dxy;
  const double cos_xi = (ay * std::cos(big_d) - ax) / dxy;
  return std::sin(psi_x - std::atan2(sin_xi, cos_xi));
}

bool bitwise_equal(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

// Worst residual over derive_seed(seed, t)-driven trials, split across a
// worker pool; the partition cannot change the max.
double max_over_trials(int trials, std::uint64_t seed, int threads,
                       const std::function<double(Rng&)>& trial) {
  const int n_threads = std::max(1, std::min(threads, trials));
  std::vector<double> worst(static_cast<std::size_t>(n_threads), 0.0);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int w = 0; w < n_threads; ++w) {
    pool.emplace_back([&, w] {
      double local = 0.0;
      for (int t = w; t < trials; t += n_threads) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        local = std::max(local, trial(rng));
      }
      worst[static_cast<std::size_t>(w)] = local;
    });
  }
  for (std::thread& th : pool) th.join();
  return *std::max_element(worst.begin(), worst.end());
}

struct Checker {
  VerifyOptions opt;
  std::uint64_t salt = 0;
  std::vector<CheckResult> results;

  void randomized(const std::string& name, double tolerance,
                  const std::function<double(Rng&)>& trial) {
    const double r = max_over_trials(opt.trials, derive_seed(opt.seed, ++salt),
                                     opt.threads, trial);
    results.push_back({name, r, tolerance, r <= tolerance});
  }

  void fixed(const std::string& name, double residual, double tolerance) {
    results.push_back({name, residual, tolerance, residual <= tolerance});
  }
};

}  // namespace

std::vector<CheckResult> verify_geometry(const VerifyOptions& opt) {
  Checker c{opt};
  const std::vector<Space> spaces = all_spaces();

  c.randomized("distance non-negativity", 1e-9, [&](Rng& rng) {
    double worst = 0.0;
    for (const Space& s : spaces) {
      const double d = distance(s, random_point(s, rng), random_point(s, rng));
      worst = std::max(worst, -d);
    }
    return worst;
  });

  c.randomized("identity of indiscernibles", 1e-9, [&](Rng& rng) {
    double worst = 0.0;
    for (const Space& s : spaces) {
      const Vec x = random_point(s, rng);
      const Vec y = random_point(s, rng);
      worst = std::max(worst, std::abs(distance(s, x, x)));
      if (!bitwise_equal(x, y) && distance(s, x, y) <= 0.0) worst = 1.0;
    }
    return worst;
  });

  c.randomized("triangle inequality", 1e-9, [&](Rng& rng) {
    double worst = 0.0;
    for (const Space& s : spaces) {
      const Vec x = random_point(s, rng);
      const Vec y = random_point(s, rng);
      const Vec z = random_point(s, rng);
      worst = std::max(
          worst, distance(s, x, y) - distance(s, x, z) - distance(s, z, y));
    }
    return worst;
  });

  c.randomized("metric symmetry", 1e-9, [&](Rng& rng) {
    double worst = 0.0;
    for (const Space& s : spaces) {
      if (!s.is_metric()) continue;
      const Vec x = random_point(s, rng);
      const Vec y = random_point(s, rng);
      worst = std::max(worst, std::abs(distance(s, x, y) - distance(s, y, x)));
    }
    return worst;
  });

  {
    const Space w = Space::polyhedral(2, {{2, 0}, {-1, 0}, {0, 1}, {0, -1}});
    const double forward = distance(w, {0.0, 0.0}, {1.0, 0.0});
    const double backward = distance(w, {1.0, 0.0}, {0.0, 0.0});
    c.fixed("asymmetric quasi-metric witness",
            forward != backward ? 0.0 : 1.0, 0.0);
  }

  c.randomized("geodesic gradient identity", 1e-6, [&](Rng& rng) {
    double worst = 0.0;
    for (const Space& s : spaces) {
      if (!s.is_metric()) continue;
      const Vec x = random_point(s, rng);
      const Vec y = random_point(s, rng);
      const double d = distance(s, x, y);
      if (d < 1e-3 || (s.kind() == Geometry::sphere && d > kPi - 1e-3)) {
        continue;
      }
      Vec v = distance_grad(s, x, y, Wrt::first);
      for (double& cv : v) cv *= -d;
      const Vec reached = exp_map(s, x, v);
      for (std::size_t i = 0; i < y.size(); ++i) {
        worst = std::max(worst, std::abs(reached[i] - y[i]));
      }
    }
    return worst;
  });

  c.randomized("distance gradient finite-difference match", 1e-4,
               [&](Rng& rng) {
    double worst = 0.0;
    for (const Space& s : spaces) {
      const Vec x = random_point(s, rng);
      const Vec y = random_point(s, rng);
      if (distance(s, x, y) < 0.1) continue;
      if (s.kind() == Geometry::sphere && distance(s, x, y) > kPi - 0.1) {
        continue;
      }
      if (s.kind() == Geometry::polyhedral) {
        // keep clear of subgradient kinks: require a unique argmax margin
        Vec diff(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
        double best = -1e300, second = -1e300;
        for (const Vec& w : s.generators()) {
          const double v = dot(w, diff);
          if (v > best) {
            second = best;
            best = v;
          } else if (v > second) {
            second = v;
          }
        }
        if (best - second < 1e-3) continue;
      }
      for (Wrt wrt : {Wrt::first, Wrt::second}) {
        const Vec& at = (wrt == Wrt::first) ? x : y;
        Vec g = distance_grad(s, x, y, wrt);
#ifdef DISKEMB_FAULT_MIS_SIGNED_GRAD
        // test-build fault: mis-signs the gradient so the harness can prove
        // this check is able to fail
        for (double& gc : g) gc = -gc;
#endif
        for (int k = 0; k < 2; ++k) {
          Vec u = random_tangent(s, at, rng);
          const double un =
              std::sqrt(std::max(riemannian_dot(s, u, u), 0.0));
          if (un < 1e-6) continue;
          for (double& uc : u) uc /= un;
          const double h = 1e-5;
          Vec up(u), um(u);
          for (double& uc : up) uc *= h;
          for (double& uc : um) uc *= -h;
          const Vec ap = exp_map(s, at, up);
          const Vec am = exp_map(s, at, um);
          const double fp =
              (wrt == Wrt::first) ? distance(s, ap, y) : distance(s, x, ap);
          const double fm =
              (wrt == Wrt::first) ? distance(s, am, y) : distance(s, x, am);
          const double fd = (fp - fm) / (2.0 * h);
          const double an = riemannian_dot(s, g, u);
          worst = std::max(worst,
                           std::abs(fd - an) / std::max(1.0, std::abs(an)));
        }
      }
    }
    return worst;
  });

  c.randomized("pure recomputation is bitwise identical", 0.0, [&](Rng& rng) {
    for (const Space& s : spaces) {
      const Vec x = random_point(s, rng);
      const Vec y = random_point(s, rng);
      if (distance(s, x, y) != distance(s, x, y)) return 1.0;
      if (distance(s, x, y) < 1e-3) continue;
      if (s.kind() == Geometry::sphere && distance(s, x, y) > kPi - 1e-3) {
        continue;
      }
      if (!bitwise_equal(distance_grad(s, x, y, Wrt::first),
                         distance_grad(s, x, y, Wrt::first))) {
        return 1.0;
      }
      const Vec u = random_tangent(s, x, rng);
      if (!bitwise_equal(exp_map(s, x, u), exp_map(s, x, u))) return 1.0;
    }
    return 0.0;
  });

  return std::move(c.results);
}

std::vector<CheckResult> verify_disks(const VerifyOptions& opt) {
  Checker c{opt};
  const std::vector<Space> spaces = all_spaces();

  c.randomized("containment reflexivity and transitivity", 0.0,
               [&](Rng& rng) {
    for (const Space& s : spaces) {
      const FormalDisk a = random_disk(s, rng);
      const FormalDisk b = random_disk(s, rng);
      const FormalDisk d = random_disk(s, rng);
      if (!contains(s, a, a)) return 1.0;
      if (contains(s, a, b) && contains(s, b, d) && !contains(s, a, d)) {
        return 1.0;
      }
    }
    return 0.0;
  });

  c.randomized("radius gauge: dyadic shifts are exact", 0.0, [&](Rng& rng) {
    for (const Space& s : spaces) {
      FormalDisk a = random_disk(s, rng);
      FormalDisk b = random_disk(s, rng);
      a.radius = static_cast<double>(static_cast<int>(rng.uniform_index(129)) -
                                     64) /
                 64.0;
      b.radius = static_cast<double>(static_cast<int>(rng.uniform_index(129)) -
                                     64) /
                 64.0;
      const double shift =
          static_cast<double>(static_cast<int>(rng.uniform_index(257)) - 128) /
          64.0;
      const FormalDisk a2{a.center, a.radius + shift};
      const FormalDisk b2{b.center, b.radius + shift};
      if (protrusion(s, a, b) != protrusion(s, a2, b2)) return 1.0;
      if (contains(s, a, b) != contains(s, a2, b2)) return 1.0;
    }
    return 0.0;
  });

  c.randomized("radius gauge: arbitrary shifts keep verdicts", 1e-12,
               [&](Rng& rng) {
    double worst = 0.0;
    for (const Space& s : spaces) {
      const FormalDisk a = random_disk(s, rng);
      const FormalDisk b = random_disk(s, rng);
      const double shift = rng.uniform(-3.0, 3.0);
      const FormalDisk a2{a.center, a.radius + shift};
      const FormalDisk b2{b.center, b.radius + shift};
      if (contains(s, a, b) != contains(s, a2, b2)) return 1.0;
      worst = std::max(worst,
                       std::abs(protrusion(s, a, b) - protrusion(s, a2, b2)));
    }
    return worst;
  });

  c.randomized("reversibility under symmetric distances", 0.0, [&](Rng& rng) {
    for (const Space& s : spaces) {
      if (!s.is_metric()) continue;
      const FormalDisk a = random_disk(s, rng);
      const FormalDisk b = random_disk(s, rng);
      const FormalDisk ra{b.center, -b.radius};
      const FormalDisk rb{a.center, -a.radius};
      if (contains(s, a, b) != contains(s, ra, rb)) return 1.0;
    }
    return 0.0;
  });

  {
    const Space w = Space::polyhedral(2, {{2, 0}, {-1, 0}, {0, 1}, {0, -1}});
    const FormalDisk a{{0.0, 0.0}, 1.5};
    const FormalDisk b{{1.0, 0.0}, 0.0};
    const FormalDisk ra{b.center, -b.radius};
    const FormalDisk rb{a.center, -a.radius};
    const bool witness = contains(w, a, b) && !contains(w, ra, rb);
    c.fixed("reversibility witness under asymmetry", witness ? 0.0 : 1.0,
            0.0);
  }

  c.randomized("hyperbolic translation invariance", 1e-9, [&](Rng& rng) {
    const Space l = Space::lorentz(3);
    std::vector<FormalDisk> disks;
    for (int i = 0; i < 12; ++i) {
      disks.push_back({random_point(l, rng, 0.7), rng.uniform(-1.0, 1.0)});
    }
    const Vec shift = {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
    std::vector<FormalDisk> moved;
    for (const FormalDisk& d : disks) {
      const Vec p = lorentz_to_poincare(d.center);
      const Vec cc = poincare_to_lorentz(poincare_translate(p, shift));
      moved.push_back({project_to_manifold(l, cc), d.radius});
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < disks.size(); ++i) {
      for (std::size_t j = 0; j < disks.size(); ++j) {
        if (i == j) continue;
        worst = std::max(worst, std::abs(protrusion(l, disks[i], disks[j]) -
                                         protrusion(l, moved[i], moved[j])));
      }
    }
    return worst;
  });

  c.randomized("lower-cone inclusion equivalence", 0.0, [&](Rng& rng) {
    const std::size_t idx = rng.uniform_index(spaces.size());
    const Space& s = spaces[idx];
    constexpr int n = 50;
    std::vector<FormalDisk> set;
    set.reserve(n);
    for (int i = 0; i < n; ++i) set.push_back(random_disk(s, rng));
    std::vector<std::vector<bool>> in(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) in[i][j] = contains(s, set[i], set[j]);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        bool subset = true;
        for (int k = 0; k < n && subset; ++k) {
          if (in[j][k] && !in[i][k]) subset = false;
        }
        if (in[i][j] != subset) return 1.0;
      }
    }
    return 0.0;
  });

  return std::move(c.results);
}

std::vector<CheckResult> verify_equivalence(const VerifyOptions& opt) {
  Checker c{opt};
  const ConeParams params(opt.cone_constant);
  const double lo = params.r_min + 0.01;
  const double hi = 0.95;

  c.randomized("order relation matches polyhedral containment", 0.0,
               [&](Rng& rng) {
    const int n = 2 + static_cast<int>(rng.uniform_index(5));
    const OrderEmbeddingMap map(n, 4.0);
    const Space space = map.disk_space();
    const Vec x = orthant_point(n, rng);
    Vec y(x);
    const bool make_related = rng.coin();
    for (double& cy : y) cy += rng.uniform(0.001, 1.0);
    if (!make_related) {
      const std::size_t idx = rng.uniform_index(static_cast<std::uint64_t>(n));
      y[idx] = 0.5 * x[idx];
    }
    const bool related = order_relation(x, y);
    if (related != contains(space, phi_ord(map, x), phi_ord(map, y))) {
      return 1.0;
    }
    if (make_related && !related) return 1.0;
    return 0.0;
  });

  c.randomized("coordinate gap equals polyhedral protrusion", 1e-9,
               [&](Rng& rng) {
    const int n = 2 + static_cast<int>(rng.uniform_index(5));
    const OrderEmbeddingMap map(n, 3.0);
    const Space space = map.disk_space();
    const Vec x = orthant_point(n, rng);
    const Vec y = orthant_point(n, rng);
    const double gap = max_coordinate_gap(x, y);
    const double prot = protrusion(space, phi_ord(map, x), phi_ord(map, y));
    return std::abs(gap - prot);
  });

  c.randomized("hinge-energy lower bound", 1e-12, [&](Rng& rng) {
    const int n = 2 + static_cast<int>(rng.uniform_index(5));
    const Vec x = orthant_point(n, rng);
    const Vec y = orthant_point(n, rng);
    const double gap = max_coordinate_gap(x, y);
    const double bound = gap > 0.0 ? gap * gap : 0.0;
    return bound - energy_order(x, y);
  });

  c.randomized("hinge-energy equality condition", 0.0, [&](Rng& rng) {
    const int n = 2 + static_cast<int>(rng.uniform_index(5));
    const Vec x = orthant_point(n, rng);
    const Vec y = orthant_point(n, rng);
    const double gap = max_coordinate_gap(x, y);
    const double bound = gap > 0.0 ? gap * gap : 0.0;
    const double e = energy_order(x, y);
    int positive = 0;
    for (int k = 0; k < n; ++k) positive += x[k] - y[k] > 0.0 ? 1 : 0;
    if (positive <= 1) return e == bound ? 0.0 : 1.0;
    return e > bound ? 0.0 : 1.0;
  });

  c.randomized("cone membership equals spherical containment", 0.0,
               [&](Rng& rng) {
    const int n = rng.coin() ? 2 : 3;
    const Space sphere = Space::sphere(n);
    const Vec x = annulus_point(n, lo, hi, rng);
    const Vec y = annulus_point(n, lo, hi, rng);
    const auto [psi, xi] = cone_angles(x, y, params);
    const bool in_cone = xi <= psi;
    const bool nested =
        contains(sphere, phi_hyp(x, params), phi_hyp(y, params));
    return in_cone == nested ? 0.0 : 1.0;
  });

  c.randomized("cone energy sign agreement", 0.0, [&](Rng& rng) {
    const int n = rng.coin() ? 2 : 3;
    const Vec x = annulus_point(n, lo, hi, rng);
    const Vec y = annulus_point(n, lo, hi, rng);
    const auto [psi, xi] = cone_angles(x, y, params);
    const double e =
        energy_hyp_closed_form(phi_hyp(x, params), phi_hyp(y, params), params);
    if (std::abs(xi - psi) <= 1e-9) return 0.0;
    return (e > 0.0) == (xi > psi) ? 0.0 : 1.0;
  });

  c.randomized("closed-form cone energy (principal branch)", 1e-6,
               [&](Rng& rng) {
    const int n = rng.coin() ? 2 : 3;
    const Vec x = annulus_point(n, lo, hi, rng);
    const Vec y = annulus_point(n, lo, hi, rng);
    const auto [psi, xi] = cone_angles(x, y, params);
    if (xi - psi > kPi / 2.0) return 0.0;  // beyond the arcsin branch point
    const double e =
        energy_hyp_closed_form(phi_hyp(x, params), phi_hyp(y, params), params);
    return std::abs(e - std::max(0.0, xi - psi));
  });

  c.randomized("cone energy sine identity (wrapped branch)", 1e-9,
               [&](Rng& rng) {
    const int n = rng.coin() ? 2 : 3;
    const Vec x = annulus_point(n, lo, hi, rng);
    const Vec y = annulus_point(n, lo, hi, rng);
    const auto [psi, xi] = cone_angles(x, y, params);
    if (xi - psi <= kPi / 2.0) return 0.0;
    const double e =
        energy_hyp_closed_form(phi_hyp(x, params), phi_hyp(y, params), params);
    if (e <= 0.0) return 1.0;
    return std::abs(std::sin(e) - std::sin(xi - psi));
  });

  c.randomized("cone map rotation equivariance", 1e-12, [&](Rng& rng) {
    const Vec x = annulus_point(3, lo, hi, rng);
    const double alpha = rng.uniform(0.0, 2.0 * kPi);
    const double beta = rng.uniform(0.0, 2.0 * kPi);
    const auto rotate = [&](const Vec& v) {
      const Vec r{std::cos(alpha) * v[0] - std::sin(alpha) * v[1],
                  std::sin(alpha) * v[0] + std::cos(alpha) * v[1], v[2]};
      return Vec{r[0], std::cos(beta) * r[1] - std::sin(beta) * r[2],
                 std::sin(beta) * r[1] + std::cos(beta) * r[2]};
    };
    const FormalDisk direct = phi_hyp(rotate(x), params);
    const FormalDisk mapped = phi_hyp(x, params);
    const Vec rotated_center = rotate(mapped.center);
    double worst = std::abs(direct.radius - mapped.radius);
    for (int k = 0; k < 3; ++k) {
      worst = std::max(worst, std::abs(direct.center[k] - rotated_center[k]));
    }
    return worst;
  });

  c.randomized("flat-cone formula matches the planar construction", 1e-6,
               [&](Rng& rng) {
    const double k = opt.cone_constant;
    const double xi0 = std::asin(k);
    const double r_x = rng.uniform(0.05, kPi / 2.0 - xi0 - 0.05);
    const double r_y = rng.uniform(0.05, kPi / 2.0 - xi0 - 0.05);
    const double big_d = rng.uniform(0.05, kPi - 0.05);
    return std::abs(euclidean_cone_angle_diff(r_x, r_y, big_d, k) -
                    planar_cone_oracle(r_x, r_y, big_d, k));
  });

  return std::move(c.results);
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& opt) {
  std::vector<CheckResult> all = verify_geometry(opt);
  std::vector<CheckResult> disks = verify_disks(opt);
  std::vector<CheckResult> equiv = verify_equivalence(opt);
  all.insert(all.end(), std::make_move_iterator(disks.begin()),
             std::make_move_iterator(disks.end()));
  all.insert(all.end(), std::make_move_iterator(equiv.begin()),
             std::make_move_iterator(equiv.end()));
  return all;
}

}  // namespace diskemb
