#include "ghost/optics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ghost {

void TestArm::validate() const {
  if (!(z1 > 0.0) || !(fc > 0.0) || !(k > 0.0))
    throw std::invalid_argument("test arm: z1, fc, k must be positive");
  if (!std::isfinite(z1) || !std::isfinite(fc) || !std::isfinite(k))
    throw std::invalid_argument("test arm: parameters must be finite");
}

void ReferenceArm::validate() const {
  if (index < 2) throw std::invalid_argument("reference arm index must be >= 2");
  if (!(z0 > 0.0) || !(f > 0.0) || !(k > 0.0))
    throw std::invalid_argument("reference arm: z0, f, k must be positive");
  if (!std::isfinite(z1)) throw std::invalid_argument("reference arm: z1 must be finite");
  if (z1 == f)
    throw std::domain_error("reference arm: z1 must differ from f (impulse-response prefactor pole)");
}

double scaled_position(const ReferenceArm& arm, double x_r) {
  if (arm.z1 == arm.f) throw std::domain_error("scaled_position: z1 == f pole");
  return arm.f * x_r / (arm.f - arm.z1);
}

double unscaled_position(const ReferenceArm& arm, double X) {
  return X * (arm.f - arm.z1) / arm.f;
}

namespace {

ObjectMask make_grid(double half_extent, int samples) {
  ObjectMask m;
  m.dx = 2.0 * half_extent / samples;
  m.x.resize(samples);
  m.t.assign(samples, cplx(0.0, 0.0));
  for (int i = 0; i < samples; ++i) m.x[i] = -half_extent + (i + 0.5) * m.dx;
  return m;
}

}  // namespace

ObjectMask ObjectMask::slits(int count, double width, double separation, int samples,
                             double extent_factor) {
  if (count < 1) throw std::invalid_argument("slit count must be >= 1");
  if (!(width > 0.0)) throw std::invalid_argument("slit width must be > 0");
  if (count > 1 && !(separation > width))
    throw std::invalid_argument("slit separation must exceed the slit width");
  const double support = (count - 1) * separation + width;
  ObjectMask m = make_grid(0.5 * extent_factor * support, samples);
  for (int s = 0; s < count; ++s) {
    const double c = (s - 0.5 * (count - 1)) * separation;
    m.feature_centers.push_back(c);
    for (int i = 0; i < samples; ++i)
      if (std::abs(m.x[i] - c) <= 0.5 * width) m.t[i] = 1.0;
  }
  return m;
}

ObjectMask ObjectMask::point(double extent, int samples) {
  ObjectMask m = make_grid(0.5 * extent, samples);
  int mid = samples / 2;
  // midpoint grids have no sample at exactly 0; take the nearest cell
  for (int i = 0; i < samples; ++i)
    if (std::abs(m.x[i]) < std::abs(m.x[mid])) mid = i;
  m.t[mid] = 1.0;
  m.feature_centers.push_back(m.x[mid]);
  return m;
}

ObjectMask ObjectMask::three_step(double step_width, int samples, double extent_factor) {
  if (!(step_width > 0.0)) throw std::invalid_argument("step width must be > 0");
  ObjectMask m = make_grid(0.5 * extent_factor * 3.0 * step_width, samples);
  const double levels[3] = {1.0 / 3.0, 2.0 / 3.0, 1.0};
  for (int s = 0; s < 3; ++s) {
    const double c = (s - 1.0) * step_width;
    m.feature_centers.push_back(c);
    for (int i = 0; i < samples; ++i)
      if (std::abs(m.x[i] - c) <= 0.5 * step_width) m.t[i] = levels[s];
  }
  return m;
}

double ObjectMask::power() const {
  double p = 0.0;
  for (const cplx& v : t) p += std::norm(v);
  return p * dx;
}

cplx ObjectMask::integral() const {
  cplx s = 0.0;
  for (const cplx& v : t) s += v;
  return s * dx;
}

double ObjectMask::support_half() const {
  double s = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (std::abs(t[i]) > 0.0) s = std::max(s, std::abs(x[i]));
  return s;
}

double ObjectMask::min_feature() const {
  double best = 0.0;
  std::size_t i = 0;
  while (i < t.size()) {
    if (std::abs(t[i]) > 0.0) {
      std::size_t j = i;
      while (j < t.size() && std::abs(t[j]) > 0.0) ++j;
      const double run = static_cast<double>(j - i) * dx;
      best = (best == 0.0) ? run : std::min(best, run);
      i = j;
    } else {
      ++i;
    }
  }
  return best;
}

cplx ObjectMask::interp(double xi) const {
  if (x.empty() || xi < x.front() || xi > x.back()) return 0.0;
  const double u = (xi - x.front()) / dx;
  const int i = std::min(static_cast<int>(u), static_cast<int>(x.size()) - 2);
  const double w = u - i;
  return t[i] * (1.0 - w) + t[i + 1] * w;
}

void ObjectMask::validate() const {
  if (x.size() != t.size() || x.empty())
    throw std::invalid_argument("object mask: grid/value size mismatch");
  if (!(dx > 0.0)) throw std::invalid_argument("object mask: dx must be > 0");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (std::abs(x[i] - x[i - 1] - dx) > 1e-9 * dx)
      throw std::invalid_argument("object mask: grid must be uniform");
  for (const cplx& v : t)
    if (std::abs(v) > 1.0 + 1e-12)
      throw std::invalid_argument("object mask: |T| must not exceed 1");
}

DetectorGrid DetectorGrid::uniform(int arm, double center, double half_extent, int count) {
  if (count < 1) throw std::invalid_argument("detector grid needs at least 1 point");
  DetectorGrid g;
  g.arm = arm;
  if (count == 1) {
    g.positions.push_back(center);
    g.spacing = 0.0;
    return g;
  }
  g.spacing = 2.0 * half_extent / count;
  g.positions.resize(count);
  for (int i = 0; i < count; ++i)
    g.positions[i] = center - half_extent + (i + 0.5) * g.spacing;
  return g;
}

DetectorGrid DetectorGrid::single(int arm, double position) {
  DetectorGrid g;
  g.arm = arm;
  g.positions.push_back(position);
  g.spacing = 0.0;
  return g;
}

void DetectorGrid::validate() const {
  if (positions.empty()) throw std::invalid_argument("detector grid is empty");
  for (std::size_t i = 1; i < positions.size(); ++i)
    if (std::abs(positions[i] - positions[i - 1] - spacing) > 1e-9 * std::abs(spacing))
      throw std::invalid_argument("detector grid must be uniform");
}

double reference_phase(const ReferenceArm& arm, double x_r, double q) {
  const double lever = arm.f - arm.z1;
  return arm.k * (arm.z0 + arm.z1)
         - q * q / (2.0 * arm.k) * (arm.z0 + arm.z1 * arm.f / lever)
         - (2.0 * q * arm.f + arm.k * x_r) * x_r / (2.0 * lever);
}

cplx reference_impulse(const ReferenceArm& arm, double x_r, double q) {
  if (arm.z1 == arm.f)
    throw std::domain_error("reference_impulse: z1 == f prefactor pole");
  const cplx mag = std::sqrt(cplx(arm.f / (two_pi * (arm.f - arm.z1)), 0.0));
  return mag * std::polar(1.0, reference_phase(arm, x_r, q));
}

cplx object_spectrum(const ObjectMask& mask, double u) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < mask.x.size(); ++i) {
    if (mask.t[i] == cplx(0.0, 0.0)) continue;
    s += mask.t[i] * std::polar(1.0, -u * mask.x[i]);
  }
  return s * mask.dx;
}

cplx test_impulse(const TestArm& arm, const ObjectMask& mask, double x1, double q) {
  const cplx pref = std::sqrt(cplx(0.0, -arm.k / arm.fc)) / two_pi;
  const double phase = arm.k * (arm.z1 + 2.0 * arm.fc) - arm.z1 * q * q / (2.0 * arm.k);
  return pref * std::polar(1.0, phase) * object_spectrum(mask, arm.k * x1 / arm.fc + q);
}

std::vector<cplx> detector_field(const SpectralAmplitude& realization,
                                 const std::function<cplx(double, double)>& impulse,
                                 const DetectorGrid& detector) {
  const FrequencyGrid& grid = realization.grid;
  if (realization.values.size() != static_cast<std::size_t>(grid.count()))
    throw std::invalid_argument("detector_field: realization does not match its grid");
  std::vector<cplx> field(detector.positions.size(), cplx(0.0, 0.0));
  for (std::size_t p = 0; p < detector.positions.size(); ++p) {
    cplx acc = 0.0;
    for (int j = 0; j < grid.count(); ++j)
      acc += impulse(detector.positions[p], -grid.samples[j]) * realization.values[j];
    field[p] = acc * grid.spacing;
  }
  return field;
}

}  // namespace ghost
