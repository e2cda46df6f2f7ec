#pragma once

#include <numbers>

namespace cpcool {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// CODATA 2018 exact/recommended values plus the graphene model constants.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;       // J s
  double k_boltzmann = 1.380649e-23;   // J/K
  double c_light = 299792458.0;        // m/s
  double mu0 = 1.25663706212e-6;       // N/A^2
  double alpha_fs = 1.0 / 137.0;       // fine-structure constant as used for graphene
  double v_tilde = 1.0 / 300.0;        // Fermi velocity / c
};

inline constexpr PhysicalConstants kConstants{};

/// Planck constant h = 2 pi hbar.
inline constexpr double planck_h() { return kTwoPi * kConstants.hbar; }

struct AtomSpecies {
  double transition_angular_frequency;  // omega_eg, rad/s
  double linewidth_gamma;               // Gamma, rad/s
  double static_polarizability;         // alpha_0, C^2 m^2 / J
  double atomic_mass;                   // kg
  double d2_wavelength;                 // m
};

/// Rb-87 on the D2 line. omega_eg derived from the wavelength.
AtomSpecies rubidium87();

/// Throws DomainError unless all fields are positive and omega_eg matches the
/// wavelength to 1e-12 relative.
void validate(const AtomSpecies& species);

struct GrapheneSheet {
  double length_L;     // m
  double width_w;      // m
  double thickness_t;  // m
  double density_rho;  // kg/m^3
  double youngs_E;     // Pa
  double tension_T;    // N (zero allowed: tensionless limit)
  double clamping_A;   // 1.03 doubly clamped, 0.162 cantilever
};

inline constexpr double kClampingDoublyClamped = 1.03;
inline constexpr double kClampingCantilever = 0.162;

/// Doubly clamped 5 um x 5 um monolayer under 1 nN tension, bulk-graphite
/// density and modulus.
GrapheneSheet default_graphene_sheet();

void validate(const GrapheneSheet& sheet);

/// Reference operating point for the density maps and decay curves.
/// Frequencies are angular (rad/s).
struct RedPointParameters {
  double eta;
  double gamma_Gamma;
  double nu;
  double omega_ph;
  double omega_rabi;
  double g;
  double delta;
  double z_a;   // m
  double c4;    // Hz um^4 (ordinary frequency)
};

/// Version tag of the data tables; bump when any default changes.
inline constexpr const char* kDataVersion = "1";

const RedPointParameters& red_point();

}  // namespace cpcool
