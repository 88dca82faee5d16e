#include "airmas/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "airmas/errors.hpp"

namespace airmas {

namespace {

constexpr double min_range = 1e-9;  // m, below this the LOS is undefined

// Sign of an angle between reference and measured ray: + when the measured
// ray is to the right of (clockwise from) the reference, + on ties.
double signed_from_cross(double magnitude, double cross_z) {
  return cross_z > 0.0 ? -magnitude : magnitude;
}

}  // namespace

const char* category_name(OrientationCategory c) {
  switch (c) {
    case OrientationCategory::Offensive: return "Offensive";
    case OrientationCategory::Defensive: return "Defensive";
    case OrientationCategory::Neutral: return "Neutral";
    case OrientationCategory::HeadOn: return "HeadOn";
  }
  return "Unknown";
}

OrientationCategory category_from_name(const std::string& name) {
  if (name == "Offensive") return OrientationCategory::Offensive;
  if (name == "Defensive") return OrientationCategory::Defensive;
  if (name == "Neutral") return OrientationCategory::Neutral;
  if (name == "HeadOn") return OrientationCategory::HeadOn;
  throw ConfigError("unknown orientation category '" + name + "'");
}

RelativeGeometry relative_geometry(const EntityState& observer, const EntityState& target) {
  if (!(observer.speed > 0.0) || !(target.speed > 0.0)) {
    throw std::invalid_argument("relative_geometry: zero speed, velocity direction undefined");
  }

  const double dx = target.x - observer.x;
  const double dy = target.y - observer.y;
  const double dz = target.z - observer.z;
  const double range = std::sqrt(dx * dx + dy * dy + dz * dz);
  if (range < min_range) {
    throw std::invalid_argument("relative_geometry: coincident positions, LOS undefined");
  }
  const double ux = dx / range, uy = dy / range, uz = dz / range;

  double ox, oy, oz;
  velocity_direction(observer, ox, oy, oz);
  double tx, ty, tz;
  velocity_direction(target, tx, ty, tz);

  const double ata_mag = std::acos(std::clamp(ox * ux + oy * uy + oz * uz, -1.0, 1.0));
  const double aa_mag = std::acos(std::clamp(tx * ux + ty * uy + tz * uz, -1.0, 1.0));

  RelativeGeometry g;
  g.range = range;
  g.delta_v = std::abs(observer.speed - target.speed);
  // Horizontal cross products give the side: LOS vs observer velocity for
  // ATA, LOS vs target velocity for AA (the tail/reverse-LOS pair has the
  // same cross product).
  g.ata = signed_from_cross(ata_mag, ox * uy - oy * ux);
  g.aa = signed_from_cross(aa_mag, tx * uy - ty * ux);

  if (dx == 0.0 && dy == 0.0) {
    g.bearing = 0.0;  // target directly above/below; horizontal bearing undefined
  } else {
    g.bearing = wrap_pi(observer.heading - std::atan2(dy, dx));
  }
  return g;
}

OrientationCategory classify_orientation(const RelativeGeometry& g) {
  const double aa = std::abs(g.aa);
  const double ata = std::abs(g.ata);
  const bool aa_low = aa <= pi / 2.0;
  const bool ata_low = ata <= pi / 2.0;
  if (aa_low && ata_low) return OrientationCategory::Offensive;
  if (!aa_low && ata_low) return OrientationCategory::HeadOn;
  if (aa_low && !ata_low) return OrientationCategory::Neutral;
  return OrientationCategory::Defensive;
}

}  // namespace airmas
