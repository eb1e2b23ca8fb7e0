#pragma once

#include "diskemb/geometry.hpp"

namespace diskemb {

// A generalized formal disk: center on the manifold, signed radius.
struct FormalDisk {
  Vec center;
  double radius = 0.0;
};

// Protrusion of disk a over disk b: l(a;b) = d(c_a, c_b) - r_a + r_b.
// Non-positive exactly when a contains b. The radius difference is summed
// first so the value is invariant under a common radius shift whenever that
// shift is exact in floating point.
inline double protrusion(const Space& space, const FormalDisk& a,
                         const FormalDisk& b) {
  return distance(space, a.center, b.center) + (b.radius - a.radius);
}

inline bool contains(const Space& space, const FormalDisk& a,
                     const FormalDisk& b) {
  return protrusion(space, a, b) <= 0.0;
}

}  // namespace diskemb
