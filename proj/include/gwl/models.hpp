#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "gwl/types.hpp"

namespace gwl {

/// Meridian profile a(s) of a surface of revolution on [0, L], with
/// a(0) = a(L) = 0, a > 0 inside, |a'| = 1 at both ends (smooth poles).
class Profile {
 public:
  virtual ~Profile() = default;
  virtual double length() const = 0;
  virtual double a(double s) const = 0;
  virtual double da(double s) const = 0;
  virtual double d2a(double s) const = 0;
  virtual std::string describe() const = 0;

  /// Coefficients (c3, c5) of a(r) = r + c3 r^3 + c5 r^5 + ... measured from
  /// the given end (0 = s=0 pole, 1 = s=L pole). Used to evaluate near-pole
  /// metric combinations without cancellation.
  std::array<double, 2> pole_series(int end) const;

  void validate() const;
};

class SinProfile final : public Profile {
 public:
  explicit SinProfile(double rho) : rho_(rho) {}
  double length() const override { return kPi * rho_; }
  double a(double s) const override;
  double da(double s) const override;
  double d2a(double s) const override;
  std::string describe() const override;

 private:
  double rho_;
};

/// Spheroid with equatorial radius req and polar half-axis c, parametrized
/// by meridian arclength. The arclength inversion is tabulated once at
/// construction and refined by Newton per query.
class SpheroidProfile final : public Profile {
 public:
  SpheroidProfile(double req, double c);
  double length() const override { return length_; }
  double a(double s) const override;
  double da(double s) const override;
  double d2a(double s) const override;
  std::string describe() const override;

 private:
  double u_of_s(double s) const;
  double speed(double u) const;  // ds/du
  double req_, c_;
  double length_;
  std::vector<double> us_, ss_;
};

/// Profile sampled as a two-column table "s a(s)", cubic-spline interpolated.
class TableProfile final : public Profile {
 public:
  TableProfile(std::vector<double> s, std::vector<double> a, double length);
  static TableProfile load(const std::string& path);
  double length() const override { return length_; }
  double a(double s) const override;
  double da(double s) const override;
  double d2a(double s) const override;
  std::string describe() const override;

 private:
  double length_;
  std::vector<double> s_, a_, m_;  // m_ = spline second derivatives
};

enum class ModelKind {
  FlatTorusTranslation,
  RoundSphereRotation,
  SphereFiniteRotation,
  SurfaceOfRevolution,
};

/// A catalog G-manifold: metric, group action, orbit structure.
struct ManifoldModel {
  ModelKind kind = ModelKind::FlatTorusTranslation;
  double r1 = 1.0;  // torus radii
  double r2 = 1.0;
  double rho = 1.0;           // sphere radius
  int n = 1;                  // cyclic order; 1 means continuous G
  std::shared_ptr<const Profile> profile;  // spheres and revolutions

  bool is_torus() const { return kind == ModelKind::FlatTorusTranslation; }
  bool has_poles() const { return !is_torus(); }
  bool finite_group() const { return kind == ModelKind::SphereFiniteRotation; }
  double meridian_length() const { return profile ? profile->length() : 0.0; }
  std::string id() const;
};

ManifoldModel make_flat_torus(double r1, double r2);
ManifoldModel make_round_sphere(double rho);
ManifoldModel make_zn_sphere(double rho, int n);
ManifoldModel make_revolution(std::shared_ptr<const Profile> profile);

/// Fraction of the meridian length within which points are canonically
/// represented in a pole chart.
inline constexpr double kPoleChartFraction = 0.05;
/// Pole charts stay valid out to this fraction (used by the flow, which
/// switches charts well before the (s, theta) coordinates degenerate).
inline constexpr double kPoleChartMaxFraction = 0.45;

struct Metric2 {
  double g[2][2];        // metric components in the chart frame
  double gamma[2][2][2]; // gamma[k][i][j] = Gamma^k_ij
};

struct Stratum {
  int k = 0;                     // orbit dimension
  std::string descriptor;
  bool open_dense = false;
  bool totally_geodesic = false;
};

struct Stratification {
  std::vector<Stratum> strata;  // ascending k
  int k0 = 0;
  int N = 0;
};

bool point_valid(const ManifoldModel& m, const SurfacePoint& p);
void require_valid(const ManifoldModel& m, const SurfacePoint& p);

/// Canonical representative: pole charts inside kPoleChartFraction * L,
/// Main elsewhere; torus coordinates wrapped.
SurfacePoint canonical(const ManifoldModel& m, const SurfacePoint& p);
SurfacePoint to_chart(const ManifoldModel& m, const SurfacePoint& p, ChartId chart);
PhasePoint to_chart(const ManifoldModel& m, const PhasePoint& pp, ChartId chart);
bool representable(const ManifoldModel& m, const SurfacePoint& p, ChartId chart);

/// Meridian arclength coordinate s of a point (distance to the s=0 pole).
double colatitude(const ManifoldModel& m, const SurfacePoint& p);
SurfacePoint north_pole(const ManifoldModel& m);
SurfacePoint south_pole(const ManifoldModel& m);

GroupElement group_element(const ManifoldModel& m, double angle_or_index);
GroupElement group_identity(const ManifoldModel& m);
GroupElement group_compose(const ManifoldModel& m, const GroupElement& g, const GroupElement& h);

int orbit_dimension(const ManifoldModel& m, const SurfacePoint& p);
Stratification stratify(const ManifoldModel& m);
SurfacePoint act(const ManifoldModel& m, const GroupElement& g, const SurfacePoint& p);
PhasePoint act_lifted(const ManifoldModel& m, const GroupElement& g, const PhasePoint& pp);
std::vector<double> orbit_invariants(const ManifoldModel& m, const SurfacePoint& p);
double orbit_invariant_distance(const ManifoldModel& m, const std::vector<double>& a,
                                const std::vector<double>& b);
Metric2 metric_at(const ManifoldModel& m, const SurfacePoint& p);

/// Near-pole metric helpers for the normal charts, evaluated without
/// cancellation: w(r) = 1/a(r)^2 - 1/r^2 and its derivative.
struct PoleMetric {
  double w;
  double wp;
};
PoleMetric pole_metric_terms(const Profile& prof, int end, double r);

}  // namespace gwl
