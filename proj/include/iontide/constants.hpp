#pragma once

// Physical constants (SI). All internal quantities are SI; exports may use
// um / us / eV as noted at the call site.
namespace iontide::constants {

inline constexpr double elementary_charge = 1.602176634e-19;   // C
inline constexpr double epsilon0          = 8.8541878128e-12;  // F/m
inline constexpr double hbar              = 1.054571817e-34;   // J s
inline constexpr double atomic_mass_unit  = 1.66053906660e-27; // kg
inline constexpr double coulomb_k         = 1.0 / (4.0 * 3.14159265358979323846 * epsilon0);
inline constexpr double pi                = 3.14159265358979323846;

inline constexpr double mass_from_amu(double amu) { return amu * atomic_mass_unit; }
inline constexpr double joules_to_ev(double joules) { return joules / elementary_charge; }

} // namespace iontide::constants
