#ifndef SQUEEZESIM_DECIBEL_HPP
#define SQUEEZESIM_DECIBEL_HPP

#include <cmath>

namespace squeezesim {

// dB bookkeeping relative to the shot noise level: 0 dB == 1 SNU.

inline double v_to_db(double v_snu) { return 10.0 * std::log10(v_snu); }

inline double db_to_v(double db) { return std::pow(10.0, db / 10.0); }

/// Squeezing amplitude r to the corresponding variance level in dB,
/// 10 log10(e^(-2r)).
inline double r_to_db(double r) { return v_to_db(std::exp(-2.0 * r)); }

/// Variance level in dB back to the squeezing amplitude r.
inline double db_to_r(double db) { return -db * std::log(10.0) / 20.0; }

/// Floor ratio in dB; negative means quantum enhancement.
inline double enhancement_db(double coherent_floor_snu,
                             double squeezed_floor_snu) {
  return 10.0 * std::log10(squeezed_floor_snu / coherent_floor_snu);
}

}  // namespace squeezesim

#endif
