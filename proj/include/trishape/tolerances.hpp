#pragma once

// Numeric constants shared by the geometric predicates and the pipeline defaults.

namespace trishape::tol {

// Relative epsilon for sign tests; scaled by the magnitude of the terms of each predicate.
inline constexpr double kSignEps = 1e-12;

// Sites closer than this fraction of the bounding-box diagonal are merged.
inline constexpr double kSnapFraction = 1e-9;

// Default open-triangle expansion as a fraction of the bounding-box diagonal.
inline constexpr double kSigmaFraction = 1e-6;

// Rational-basis denominators at or below this are treated as zero.
inline constexpr double kWeightEps = 1e-300;

}  // namespace trishape::tol
