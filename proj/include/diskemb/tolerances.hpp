#pragma once

// Single source of truth for the numeric tolerances used across the library
// and referenced by the test suites.
namespace diskemb::tol {

// Sphere/Lorentz membership and tangency invariants.
inline constexpr double kMembership = 1e-9;

// Short-vector cutoff: exp_map returns its base point below this norm, and
// gradient directions shorter than this are treated as degenerate.
inline constexpr double kTinyNorm = 1e-12;

// Feasibility residual for the conic-hull linear programs.
inline constexpr double kConicFeasibility = 1e-9;

}  // namespace diskemb::tol
