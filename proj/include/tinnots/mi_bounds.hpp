#pragma once
#include "tinnots/constellation.hpp"

namespace tinnots {

// The five bound families for a discrete input on a unit-variance additive
// Gaussian noise channel.
enum class MiBoundKind { OzarowWynerB, OzarowWynerA, DtdSimple, DtdFull, UpperMin };

// value: the clamped bound in bits. gap_term: the additive gap g such that
// the unclamped bound equals H(X) - g; kept separate so callers can see how
// far below zero a clamped bound fell.
struct BoundValue {
  double value = 0;
  double gap_term = 0;
};

// 0.5*log2(1+x). Rejects x < 0.
double ig(double x);

// floor(sqrt(1+x)) clamped to >= 1, with exact integer-boundary handling.
int nd(double x);

// [H(X) - 0.5*log2(2*pi*e/12) - 0.5*log2(1+12/dmin^2)]^+; 0 for singletons.
double id_bits(const DiscreteConstellation& c);

BoundValue ow_b_lower(const DiscreteConstellation& c);
BoundValue ow_a_lower(const DiscreteConstellation& c);
BoundValue dtd_simple_lower(const DiscreteConstellation& c);  // equiprobable only
BoundValue dtd_full_lower(const DiscreteConstellation& c);
double mi_upper(const DiscreteConstellation& c);  // min(H, ig(energy))
BoundValue mi_bound(MiBoundKind kind, const DiscreteConstellation& c);

// Gaussian tail probability, 0.5*erfc(x/sqrt(2)).
double q_function(double x);

// ig(snr) minus the dirty-paper-style penalty of a state constellation t;
// deliberately unclamped (diagnostic, may be negative).
double state_channel_rate_lower(double snr, const DiscreteConstellation& t);

// Named constants, all bits.
double shaping_gap_bits();       // 0.5*log2(2*pi*e/12) ~= 0.2546
double pam_capacity_gap_bits();  // 0.5*log2(2*pi*e/3)  ~= 1.2546
double half_log2_2pie();         // 0.5*log2(2*pi*e)    ~= 2.0472
double half_log2_6pie();         // 0.5*log2(6*pi*e)    ~= 2.8395

}  // namespace tinnots
