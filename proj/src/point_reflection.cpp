#include "simplexhull/point_reflection.hpp"

#include "simplexhull/hull_oracle.hpp"

namespace simplexhull {

const char* to_string(VolumeMethod method) {
  switch (method) {
    case VolumeMethod::kParallelFacets:
      return "parallel-facets";
    case VolumeMethod::kWithCaps:
      return "with-caps";
    case VolumeMethod::kOracle:
      return "oracle";
  }
  return "unknown";
}

double point_reflection_oracle_volume(const Simplexd& s, const Vectord& x) {
  const Matrixd& v = s.vertices();
  const Matrixd mirrored = (-v).colwise() + 2.0 * x;
  return union_hull_volume(v, mirrored);
}

PointReflectionVolume point_reflection_volume(const Simplexd& s, const Vectord& x) {
  const auto closed = point_reflection_closed_form(s, x);
  if (closed) {
    return {closed->volume,
            closed->kind == PointReflectionCase::kParallelFacets ? VolumeMethod::kParallelFacets
                                                                 : VolumeMethod::kWithCaps,
            closed->apex};
  }
  return {point_reflection_oracle_volume(s, x), VolumeMethod::kOracle, -1};
}

}  // namespace simplexhull
