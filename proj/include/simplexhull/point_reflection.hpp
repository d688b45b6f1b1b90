#pragma once

#include "simplexhull/reflection.hpp"

namespace simplexhull {

enum class VolumeMethod { kParallelFacets, kWithCaps, kOracle };

const char* to_string(VolumeMethod method);

struct PointReflectionVolume {
  double volume = 0;
  VolumeMethod method = VolumeMethod::kOracle;
  int apex = -1;  ///< apex vertex of the decomposition, -1 for the oracle
};

/// Vol(conv(S u S_x)) for x in S, canonical frame. Uses the closed-form
/// decomposition when it applies to some apex and the hull oracle otherwise;
/// `method` records which.
PointReflectionVolume point_reflection_volume(const Simplexd& s, const Vectord& x);

/// Oracle value of the same volume (2(n+1) points).
double point_reflection_oracle_volume(const Simplexd& s, const Vectord& x);

}  // namespace simplexhull
