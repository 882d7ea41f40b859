#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "ghost/speckle.hpp"

namespace ghost {

/// Test arm: source -> object at z1 -> collection lens (focal length fc)
/// -> bucket detector in the back focal plane.
struct TestArm {
  double z1 = 0.0;  // source to object [length]
  double fc = 0.0;  // collection focal length
  double k = 0.0;   // wavenumber [rad / length]
  void validate() const;
};

/// Reference arm r: source -> imaging lens at z0 -> scanning detector at z1
/// past the lens. Negative z1 probes virtual-image geometry analytically;
/// a physical detector requires z1 > 0.
struct ReferenceArm {
  int index = 2;
  double z0 = 0.0;
  double z1 = 0.0;
  double f = 0.0;
  double k = 0.0;
  void validate() const;  // rejects the z1 == f prefactor pole
};

/// Detector coordinate mapped back through the arm: X = f x / (f - z1).
/// The ghost image is the object transmission evaluated at X.
double scaled_position(const ReferenceArm& arm, double x_r);
double unscaled_position(const ReferenceArm& arm, double X);

/// Sampled complex transmission T(x) on a uniform grid, |T| <= 1.
struct ObjectMask {
  std::vector<double> x;
  std::vector<cplx> t;
  double dx = 0.0;
  std::vector<double> feature_centers;  // transmitting feature centers (presets)

  static ObjectMask slits(int count, double width, double separation, int samples,
                          double extent_factor);
  static ObjectMask point(double extent, int samples);
  static ObjectMask three_step(double step_width, int samples, double extent_factor);

  double power() const;        // integral |T|^2 dx
  cplx integral() const;       // integral T dx
  double support_half() const; // largest |x| with T != 0
  double min_feature() const;  // narrowest contiguous transmitting run
  cplx interp(double xi) const;  // linear interpolation, 0 outside the grid
  void validate() const;
};

/// Uniform detector scan grid for one arm (a single position = parked).
struct DetectorGrid {
  int arm = 0;
  std::vector<double> positions;
  double spacing = 0.0;

  static DetectorGrid uniform(int arm, double center, double half_extent, int count);
  static DetectorGrid single(int arm, double position);
  int count() const { return static_cast<int>(positions.size()); }
  void validate() const;
};

/// Reference-arm impulse response in the spatial-frequency domain:
/// constant-magnitude prefactor sqrt(f / (2 pi (f - z1))) times a unit
/// phasor. A negative radicand is taken on the principal branch.
cplx reference_impulse(const ReferenceArm& arm, double x_r, double q);

/// Phase of the reference-arm response: propagation phase k(z0 + z1) minus
/// the quadratic defocus term and the detector cross term.
double reference_phase(const ReferenceArm& arm, double x_r, double q);

/// Object Fourier sum: integral T(x) exp(-i u x) dx on the mask grid.
cplx object_spectrum(const ObjectMask& mask, double u);

/// Test-arm impulse response: lens/propagation prefactor times the object
/// spectrum at the conjugate frequency k x1 / fc + q.
cplx test_impulse(const TestArm& arm, const ObjectMask& mask, double x1, double q);

/// Propagate one source realization to a detector plane:
/// E(x_n) = sum_j h(x_n, -q_j) E_j dq.
std::vector<cplx> detector_field(const SpectralAmplitude& realization,
                                 const std::function<cplx(double, double)>& impulse,
                                 const DetectorGrid& detector);

}  // namespace ghost
