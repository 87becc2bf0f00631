#pragma once

// Published constants that every verification run is compared against.
// This is the only place they are written down; tests and the CLI read them
// from here.

#include <string_view>

namespace sextactica::expected {

inline constexpr int kManifestVersion = 1;

// flexes and flex lines
inline constexpr std::size_t kFlexes = 9;
inline constexpr std::size_t kFlexesPerCoordinateLine = 3;
inline constexpr std::size_t kHesseLines = 12;
inline constexpr std::string_view kHesseSignature = "(12_3, 9_4)";
inline constexpr std::size_t kDualHesseLines = 9;
inline constexpr std::string_view kDualHesseSignature = "(9_4, 12_3)";
inline constexpr std::size_t kTriplePoints = 12;
inline constexpr int kWitnessVanishingOrder = 3;

// second Hessian of a degree-d curve: degree 12 d - 27, psi weight 20 (d - 2)^2
inline constexpr int kPsiWeightBase = 20;
inline constexpr int kHistoricalPsiWeightBase = 40;
inline constexpr int second_hessian_degree(int d) { return 12 * d - 27; }

// sextactic points
inline constexpr std::size_t kSextactic = 27;
inline constexpr std::size_t kSextacticLines = 9;  // linear factors of H2(F)
inline constexpr std::size_t kSixTorsion = 36;
inline constexpr std::size_t kTwoTorsion = 4;

// conic census
inline constexpr std::size_t kSixSubsets = 296010;
inline constexpr std::size_t kConics = 8244;
inline constexpr std::size_t kSmoothConics = 5976;
inline constexpr std::size_t kSplitConics = 2268;
inline constexpr std::size_t kConicsPerPoint = 1832;
inline constexpr std::size_t kSmoothConicsPerPoint = 1328;

// split-conic lines
inline constexpr std::size_t kSplitLines = 81;
inline constexpr std::string_view kSplitLineSignature = "(81_3, 27_9)";
inline constexpr bool kSplitLineProductIntegral = true;

// five-point conics: every residual is a tangency at a member
inline constexpr std::size_t kFiveSubsets = 80730;
inline constexpr bool kFivePointAllTangent = true;

}  // namespace sextactica::expected
