#include "ghost/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace ghost {

double PowerSpectrum::operator()(double q) const {
  const double u = q - center;
  switch (shape) {
    case SpectrumShape::TopHat:
      return std::abs(u) <= 0.5 * bandwidth ? level : 0.0;
    case SpectrumShape::Gaussian: {
      const double sigma = 0.5 * bandwidth;
      const double a = u / sigma;
      return level * std::exp(-0.5 * a * a);
    }
  }
  return 0.0;
}

double PowerSpectrum::band_half_support() const {
  return shape == SpectrumShape::TopHat ? 0.5 * bandwidth : 1.5 * bandwidth;
}

double PowerSpectrum::effective_bandwidth() const {
  if (shape == SpectrumShape::TopHat) return bandwidth;
  // integral of exp(-q^2 / (2 sigma^2)) = sigma sqrt(2 pi), sigma = q0/2
  return 0.5 * bandwidth * std::sqrt(two_pi);
}

void PowerSpectrum::validate() const {
  if (level < 0.0) throw std::invalid_argument("spectrum level must be >= 0");
  if (!(bandwidth > 0.0)) throw std::invalid_argument("spectrum bandwidth must be > 0");
  if (!std::isfinite(level) || !std::isfinite(bandwidth) || !std::isfinite(center))
    throw std::invalid_argument("spectrum parameters must be finite");
}

FrequencyGrid FrequencyGrid::centered(double center, double half_extent, int count) {
  if (count < 32) throw std::invalid_argument("frequency grid needs at least 32 samples");
  if (!(half_extent > 0.0)) throw std::invalid_argument("frequency grid extent must be > 0");
  FrequencyGrid g;
  g.spacing = 2.0 * half_extent / count;
  g.samples.resize(count);
  for (int j = 0; j < count; ++j)
    g.samples[j] = center - half_extent + (j + 0.5) * g.spacing;
  return g;
}

void FrequencyGrid::validate() const {
  if (count() < 32) throw std::invalid_argument("frequency grid needs at least 32 samples");
  if (!(spacing > 0.0)) throw std::invalid_argument("frequency grid spacing must be > 0");
  for (int j = 1; j < count(); ++j) {
    const double step = samples[j] - samples[j - 1];
    if (std::abs(step - spacing) > 1e-9 * spacing)
      throw std::invalid_argument("frequency grid must be uniform");
  }
}

void FrequencyGrid::require_covers(const PowerSpectrum& spec) const {
  const double lo = spec.center - 0.5 * spec.bandwidth;
  const double hi = spec.center + 0.5 * spec.bandwidth;
  if (samples.front() - 0.5 * spacing > lo || samples.back() + 0.5 * spacing < hi)
    throw std::invalid_argument("frequency grid does not span the source band");
}

double integrated_power(const PowerSpectrum& spec, const FrequencyGrid& grid) {
  double sum = 0.0;
  for (double q : grid.samples) sum += spec(q);
  return sum * grid.spacing;
}

}  // namespace ghost
