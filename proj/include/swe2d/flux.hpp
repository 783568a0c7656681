#pragma once

#include <array>

#include "swe2d/reconstruction.hpp"

namespace swe {

/// One-sided local wave speeds at an interface: `in` is the inward speed (against
/// the outward normal of the owning cell), `out` the outward speed. Both are
/// nonnegative by construction.
struct LocalSpeeds {
  double in = 0.0;
  double out = 0.0;
};

/// Physical flux of (w, qx, qy) projected on the unit direction (nx, ny), evaluated
/// from a reconstructed interface state (which carries desingularized velocities, so
/// no raw division by a small depth happens here).
std::array<double, 3> physical_flux(const InterfaceState& s, double nx, double ny, double g);

/// Convenience overload from raw values; h = w - B must be nonnegative.
std::array<double, 3> physical_flux(double w, double b, double qx, double qy, double nx,
                                    double ny, double g, double eps, double eta = 1e-6);

/// Local speeds from the smallest/largest characteristic speeds u*nx + v*ny -+ sqrt(g h)
/// over the two interface states, floored at zero.
LocalSpeeds local_speeds(const InterfaceState& in, const InterfaceState& out, double nx,
                         double ny, double g);

/// Central-upwind edge term A_jk (per unit edge length; the caller applies the
/// d_jk / |T_j| weighting). Blends the projected physical fluxes of the two states
/// with the one-sided speeds and adds the speed-weighted jump of (w, qx, qy).
/// Reduces exactly to -physical_flux when both states agree, and evaluates to the
/// average of the two physical fluxes when both speeds vanish (dry-dry interface).
/// Antisymmetric under swapping the states and negating the direction, so interior
/// edges can be computed once and applied with opposite signs.
std::array<double, 3> central_upwind_flux(const InterfaceState& in, const InterfaceState& out,
                                          const LocalSpeeds& s, double nx, double ny, double g);

}  // namespace swe
