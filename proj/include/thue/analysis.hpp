#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace thue {

using BigInt = boost::multiprecision::cpp_int;
using Real = boost::multiprecision::cpp_bin_float_50;

/// Sequence over {+1, -1}.
using SignSequence = std::vector<int>;

/// Product of 2*delta*h over the maximal runs of -1 (h = run length);
/// 1 when there is no -1.
BigInt f_weight(std::span<const int> signs, unsigned delta);

/// a_m as the sum of f_weight over all 2^m sign sequences of length m.
BigInt a_def(std::size_t m, unsigned delta);

/// Three equivalent ways to generate a_m.
enum class RecurrenceForm {
  /// a_m = a_{m-1} + sum_{k=1}^{m-2} 2*delta*k*a_{m-1-k} + 2*delta*(2m-1), m >= 2
  Full,
  /// a_m = 2a_{m-1} + (2delta-1)a_{m-2} + 2delta*(a_1+...+a_{m-3}) + 4delta, m >= 3
  Telescoped,
  /// a_m = 3a_{m-1} + (2delta-3)a_{m-2} + a_{m-3}, m >= 4
  Cubic,
};

/// a_1..a_m (index 0 holds a_1) from the given recurrence and its base values.
std::vector<BigInt> a_sequence(std::size_t m, unsigned delta, RecurrenceForm form = RecurrenceForm::Cubic);

/// a_m from the recurrence; m >= 1.
BigInt a_rec(std::size_t m, unsigned delta, RecurrenceForm form = RecurrenceForm::Cubic);

/// Roots of x^3 - 3x^2 - (2delta-3)x - 1.
struct CubicRoots {
  unsigned delta = 0;
  std::array<std::complex<double>, 3> roots;  // roots[0] is the dominant real root
  bool all_real = false;
  double phi = 0.0;  // trigonometric angle, set when all_real
  Real lambda0;      // dominant root at full working precision

  double dominant() const { return roots[0].real(); }
};

/// Cardano's formula when the cubic has one real root (delta = 3), the
/// trigonometric form when it has three (delta >= 4). Requires delta >= 3.
CubicRoots char_roots(unsigned delta);

/// |x^3 - 3x^2 - (2delta-3)x - 1| evaluated in complex arithmetic.
double cubic_residual(std::complex<double> x, unsigned delta);

/// List length threshold for delta >= 4.
struct ListSize {
  unsigned delta = 0;
  long l = 0;
  Real lambda0;
  Real lambda0_sq;
  bool below_five_delta = false;    // l < 5 delta
  bool ceiling_margin_ok = false;   // lambda0^2 <= l - 0.5
  /// l - 1.5 - lambda0^2; the chain lambda0^2 + 1 < l - 0.5 needs this > 0.
  double chain_margin = 0.0;
  double ratio = 0.0;  // l / delta
};

/// l = ceil(lambda0^2 + 0.5) evaluated at 50 decimal digits. delta >= 4.
ListSize list_size(unsigned delta);

/// (8/3) cos^2(phi) - 2 at the limit phi = pi/6; exactly 0.
Real limit_excess();

struct GrowthCertificate {
  unsigned delta = 0;
  double lambda0 = 0.0;
  std::vector<double> ratios;  // a_m / a_{m-1} for m = 2..m_max
  double final_error = 0.0;    // |ratio at m_max - lambda0|
  bool errors_shrink = false;  // |ratio - lambda0| is non-increasing in m
  long l = 0;                  // 15 for delta = 3, list_size otherwise
  double lambda0_sq = 0.0;
  bool lambda0_sq_below_l = false;
  double chain_margin = 0.0;  // l - 1.5 - lambda0^2, reported only
};

/// Ratios of consecutive a_m against the dominant root; delta >= 3.
GrowthCertificate growth_certificate(unsigned delta, std::size_t m_max);

}  // namespace thue
