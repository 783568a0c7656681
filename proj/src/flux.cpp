#include "swe2d/flux.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace swe {

std::array<double, 3> physical_flux(const InterfaceState& s, double nx, double ny, double g) {
  const double half_gh2 = 0.5 * g * s.h * s.h;
  // F = (qx, u qx + g h^2 / 2, u qy), G = (qy, v qx, v qy + g h^2 / 2)
  return {nx * s.qx + ny * s.qy,
          nx * (s.u * s.qx + half_gh2) + ny * (s.v * s.qx),
          nx * (s.u * s.qy) + ny * (s.v * s.qy + half_gh2)};
}

std::array<double, 3> physical_flux(double w, double b, double qx, double qy, double nx,
                                    double ny, double g, double eps, double eta) {
  InterfaceState s;
  s.w = w;
  s.h = w - b;
  assert(s.h >= 0.0 && "physical_flux requires a nonnegative depth");
  s.qx = qx;
  s.qy = qy;
  const auto [u, v] = desingularized_velocity(s.h, qx, qy, eps, eta);
  s.u = u;
  s.v = v;
  return physical_flux(s, nx, ny, g);
}

LocalSpeeds local_speeds(const InterfaceState& in, const InterfaceState& out, double nx,
                         double ny, double g) {
  const double c_in = std::sqrt(g * in.h);
  const double c_out = std::sqrt(g * out.h);
  const double l_in = nx * in.u + ny * in.v;
  const double l_out = nx * out.u + ny * out.v;
  LocalSpeeds s;
  s.in = -std::min({l_in - c_in, l_out - c_out, 0.0});
  s.out = std::max({l_in + c_in, l_out + c_out, 0.0});
  return s;
}

std::array<double, 3> central_upwind_flux(const InterfaceState& in, const InterfaceState& out,
                                          const LocalSpeeds& s, double nx, double ny, double g) {
  const auto f_in = physical_flux(in, nx, ny, g);
  const auto f_out = physical_flux(out, nx, ny, g);
  const double total = s.in + s.out;
  if (total < 1e-10) {
    // Both speeds vanish (dry or stagnant on both sides): fall back to the plain
    // average, which is zero whenever the physical fluxes are.
    return {-0.5 * (f_in[0] + f_out[0]), -0.5 * (f_in[1] + f_out[1]),
            -0.5 * (f_in[2] + f_out[2])};
  }
  const double diff = s.in * s.out / total;
  const std::array<double, 3> u_in{in.w, in.qx, in.qy};
  const std::array<double, 3> u_out{out.w, out.qx, out.qy};
  std::array<double, 3> a;
  for (int i = 0; i < 3; ++i) {
    // The blended flux is written as f_in + b_in*(f_out - f_in)/(b_in + b_out) so it
    // reduces to f_in bitwise when the two physical fluxes agree.
    const double blended = f_in[i] + s.in * (f_out[i] - f_in[i]) / total;
    a[i] = -blended + diff * (u_out[i] - u_in[i]);
  }
  return a;
}

}  // namespace swe
