#pragma once

#include "explore/raster.hpp"

namespace explore {

/// Value assigned when no source cell exists anywhere in the raster.
inline constexpr double kNoSource = 1e20;

/// Exact squared Euclidean distance, in cell units, from every cell center to
/// the nearest source cell center (two-pass parabolic envelope transform).
/// Squared distances are exact integers; cells unreachable from any source
/// hold ~kNoSource.
Raster<double> squared_cell_distance(const Raster<unsigned char>& sources);

/// Euclidean center-to-center distance in meters, truncated at cap.
Raster<double> truncated_distance_m(const Raster<unsigned char>& sources,
                                    double resolution, double cap);

}  // namespace explore
