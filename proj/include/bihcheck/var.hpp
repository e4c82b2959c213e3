#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace bih {

/// Closed variable registry. Declaration order is the fixed total order
/// used for monomial comparison: f < k < z < m < r < c < alpha < beta < s < fp.
///
///   f      mean curvature (f~ along the curve)
///   k      middle principal curvature k2
///   z      ratio k2 / f
///   m, r   dimension and multiplicity parameter (r = 1 + m2)
///   c      sectional curvature of the ambient space form
///   alpha, beta   constant ratios k2/f and k3/f
///   s      (f')^2
///   fp     f'
enum class Var : std::uint8_t { f, k, z, m, r, c, alpha, beta, s, fp };

inline constexpr std::size_t kNumVars = 10;

inline constexpr std::array<Var, kNumVars> kAllVars{
    Var::f, Var::k, Var::z, Var::m, Var::r, Var::c, Var::alpha, Var::beta, Var::s, Var::fp};

inline constexpr std::array<std::string_view, kNumVars> kVarNames{
    "f", "k", "z", "m", "r", "c", "alpha", "beta", "s", "fp"};

constexpr std::size_t index(Var v) noexcept { return static_cast<std::size_t>(v); }

constexpr std::string_view name(Var v) noexcept { return kVarNames[index(v)]; }

constexpr std::optional<Var> var_from_name(std::string_view text) noexcept {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == text) return static_cast<Var>(i);
    return std::nullopt;
}

}  // namespace bih
