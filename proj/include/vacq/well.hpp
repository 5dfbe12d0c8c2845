#ifndef VACQ_WELL_HPP
#define VACQ_WELL_HPP

namespace vacq {

/// Square-well configuration in natural units (hbar = c = 1).
///
/// The potential is V(z) = -eta for |z| < a/2 and 0 outside; the fermion mass
/// is m. Charge is electron number per unit length throughout, never
/// multiplied by the electric charge.
struct WellParameters {
    double m = 1.0;    ///< fermion mass, > 0
    double a = 1.0;    ///< well width, > 0
    double eta = 0.0;  ///< well depth, >= 0

    /// True iff eta <= m, the regime where no negative-energy bound states
    /// appear and the spectral formulas used here are valid.
    bool no_negative_bound_states = true;

    bool free_field() const { return eta == 0.0; }
    double half_width() const { return 0.5 * a; }
};

/// Checks finiteness and signs and fills in the regime flag.
///
/// Validation is total: every finite triple either yields a WellParameters or
/// throws ValidationError. eta > m is accepted here (with the flag cleared);
/// spectral and charge operations reject it themselves so the CLI can report
/// a proper regime error.
WellParameters validate_well(double m, double a, double eta);

} // namespace vacq

#endif
