#pragma once

#include <vector>

namespace ghost {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

enum class SpectrumShape { TopHat, Gaussian };

/// Power spectrum S(q) of the source's transverse spatial frequencies.
/// TopHat is a flat band of width `bandwidth` around `center`; Gaussian
/// uses sigma = bandwidth / 2.
struct PowerSpectrum {
  SpectrumShape shape = SpectrumShape::TopHat;
  double level = 1.0;      // S(0), field-intensity density per unit q
  double bandwidth = 0.0;  // q0 [rad / length]
  double center = 0.0;

  double operator()(double q) const;

  /// Half-width of the region where S is treated as nonzero
  /// (bandwidth/2 for the top hat, 3 sigma for the gaussian).
  double band_half_support() const;

  /// Bandwidth of an equivalent flat band: integral of S / S(0).
  double effective_bandwidth() const;

  void validate() const;
};

/// Uniform spatial-frequency grid (midpoint samples, symmetric about the
/// construction center so that q -> 2*center - q maps samples to samples).
struct FrequencyGrid {
  std::vector<double> samples;
  double spacing = 0.0;

  static FrequencyGrid centered(double center, double half_extent, int count);

  int count() const { return static_cast<int>(samples.size()); }
  void validate() const;

  /// Grids must span the source band they discretize.
  void require_covers(const PowerSpectrum& spec) const;
};

/// Riemann sum of S over the grid.
double integrated_power(const PowerSpectrum& spec, const FrequencyGrid& grid);

}  // namespace ghost
