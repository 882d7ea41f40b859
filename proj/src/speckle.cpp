#include "ghost/speckle.hpp"

#include <cmath>
#include <stdexcept>

namespace ghost {

std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::mt19937_64 realization_engine(std::uint64_t seed, std::int64_t index) {
  const std::uint64_t s = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index)));
  return std::mt19937_64(s);
}

void sample_field_into(const PowerSpectrum& spec, const FrequencyGrid& grid,
                       std::uint64_t seed, std::int64_t index, std::span<cplx> out) {
  if (!(grid.spacing > 0.0)) throw std::invalid_argument("sample_field: nonpositive grid spacing");
  if (out.size() != static_cast<std::size_t>(grid.count()))
    throw std::invalid_argument("sample_field: output size does not match grid");
  auto rng = realization_engine(seed, index);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int j = 0; j < grid.count(); ++j) {
    // real and imaginary parts independent, variance S/(2 dq) each
    const double sigma = std::sqrt(0.5 * spec(grid.samples[j]) / grid.spacing);
    const double re = sigma * gauss(rng);
    const double im = sigma * gauss(rng);
    out[j] = cplx(re, im);
  }
}

SpectralAmplitude sample_field(const PowerSpectrum& spec, const FrequencyGrid& grid,
                               std::uint64_t seed, std::int64_t index) {
  SpectralAmplitude a;
  a.grid = grid;
  a.values.resize(grid.count());
  a.realization_index = index;
  a.seed = seed;
  sample_field_into(spec, grid, seed, index, a.values);
  return a;
}

}  // namespace ghost
