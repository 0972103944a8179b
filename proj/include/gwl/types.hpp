#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gwl {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Chart identifiers. Tori live entirely in Main. Spheres and surfaces of
/// revolution use Main = (s, theta) with s the meridian arclength, plus a
/// normal chart at each pole.
enum class ChartId : std::uint8_t { Main = 0, PoleNorth = 1, PoleSouth = 2 };

struct SurfacePoint {
  ChartId chart = ChartId::Main;
  double u = 0.0;
  double v = 0.0;
};

/// Group element of G. For continuous G = SO(2) or the torus translation
/// circle, `angle` in [0, 2pi) is the parameter. For G = Z_n, `index` in
/// {0..n-1} is canonical and `angle` caches 2 pi index / n.
struct GroupElement {
  double angle = 0.0;
  int index = 0;
};

/// Base point plus covector components in the chart coframe.
struct PhasePoint {
  SurfacePoint base;
  double pu = 0.0;
  double pv = 0.0;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FlowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double wrap_angle(double a, double period) {
  double r = a - period * static_cast<long long>(a / period);
  if (r < 0.0) r += period;
  if (r >= period) r -= period;
  return r;
}

/// Signed wrap to (-period/2, period/2].
inline double wrap_diff(double a, double period) {
  double r = wrap_angle(a, period);
  if (r > 0.5 * period) r -= period;
  return r;
}

}  // namespace gwl
