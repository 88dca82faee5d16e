#pragma once

#include <string>

#include "airmas/entity_state.hpp"

namespace airmas {

// Relative-orientation features for an ordered (observer, target) pair.
// ata: angle at the observer between its velocity vector and the line of
//      sight to the target. 0 = target dead ahead.
// aa:  angle at the target between its tail and the line of sight back to
//      the observer. 0 = observer directly astern.
// Signed convention: positive means the measured ray lies to the right
// (clockwise in the horizontal plane, seen from above) of the reference
// vector; magnitudes come from the full 3D dot product. At exactly 0 or pi
// the sign is +.
struct RelativeGeometry {
  double ata = 0.0;      // rad, (-pi, pi]
  double aa = 0.0;       // rad, (-pi, pi]
  double range = 0.0;    // m
  double delta_v = 0.0;  // m/s, | |v_obs| - |v_tgt| |
  double bearing = 0.0;  // rad, horizontal bearing to target from own heading, right-positive
};

enum class OrientationCategory { Offensive, Defensive, Neutral, HeadOn };

const char* category_name(OrientationCategory c);
OrientationCategory category_from_name(const std::string& name);

// Throws std::invalid_argument on coincident positions or zero speeds.
RelativeGeometry relative_geometry(const EntityState& observer, const EntityState& target);

// Quadrants of the (|aa|, |ata|) orientation space. Boundaries closed
// toward Offensive.
OrientationCategory classify_orientation(const RelativeGeometry& g);

}  // namespace airmas
