#include "thue/analysis.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "thue/error.hpp"

namespace thue {

BigInt f_weight(std::span<const int> signs, unsigned delta) {
  BigInt w = 1;
  std::size_t run = 0;
  for (std::size_t i = 0; i <= signs.size(); ++i) {
    if (i < signs.size() && signs[i] != 1 && signs[i] != -1) {
      throw Error(ErrorCode::BadInput, "sign sequence entries must be +1 or -1");
    }
    if (i < signs.size() && signs[i] == -1) {
      ++run;
    } else if (run > 0) {
      w *= BigInt(2) * delta * run;
      run = 0;
    }
  }
  return w;
}

BigInt a_def(std::size_t m, unsigned delta) {
  if (m == 0 || m > 30) throw Error(ErrorCode::BadParams, "a_def needs 1 <= m <= 30");
  BigInt total = 0;
  SignSequence s(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t i = 0; i < m; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
    total += f_weight(s, delta);
  }
  return total;
}

std::vector<BigInt> a_sequence(std::size_t m, unsigned delta, RecurrenceForm form) {
  if (m == 0) throw Error(ErrorCode::BadParams, "m must be positive");
  const BigInt d = 2 * BigInt(delta);  // 2 delta
  std::vector<BigInt> a;
  a.reserve(m);
  a.push_back(d + 1);
  for (std::size_t k = 2; k <= m; ++k) {
    BigInt next;
    if (form == RecurrenceForm::Full || k == 2) {
      next = a[k - 2] + d * (2 * k - 1);
      for (std::size_t j = 1; j + 2 <= k; ++j) next += d * j * a[k - 2 - j];
    } else if (form == RecurrenceForm::Telescoped || k == 3) {
      next = 2 * a[k - 2] + (d - 1) * a[k - 3] + 2 * d;
      for (std::size_t j = 1; j + 3 <= k; ++j) next += d * a[j - 1];
    } else {
      next = 3 * a[k - 2] + (d - 3) * a[k - 3] + a[k - 4];
    }
    a.push_back(std::move(next));
  }
  return a;
}

BigInt a_rec(std::size_t m, unsigned delta, RecurrenceForm form) {
  return a_sequence(m, delta, form).back();
}

double cubic_residual(std::complex<double> x, unsigned delta) {
  const double b = 2.0 * delta - 3.0;
  return std::abs(x * x * x - 3.0 * x * x - b * x - 1.0);
}

CubicRoots char_roots(unsigned delta) {
  if (delta < 3) throw Error(ErrorCode::BadParams, "char_roots needs delta >= 3");
  using boost::multiprecision::cbrt;
  using boost::multiprecision::sqrt;
  CubicRoots out;
  out.delta = delta;
  const Real dl = delta;
  // x = y + 1 turns the cubic into y^3 - 2 delta y - 2 delta = 0.
  const Real disc = dl * dl * (1 - 8 * dl / 27);
  if (disc > 0) {
    const Real root = sqrt(disc);
    const Real a = cbrt(dl + root);
    const Real b = cbrt(dl - root);
    out.lambda0 = 1 + a + b;
    const double re = static_cast<double>(1 - (a + b) / 2);
    const double im = static_cast<double>(sqrt(Real(3)) / 2 * (a - b));
    out.roots = {std::complex<double>(static_cast<double>(out.lambda0), 0.0),
                 std::complex<double>(re, im), std::complex<double>(re, -im)};
    return out;
  }
  const Real pi = boost::math::constants::pi<Real>();
  const Real phi = boost::multiprecision::acos(sqrt(Real(27) / (8 * dl))) / 3;
  const Real scale = 2 * sqrt(2 * dl / 3);
  out.all_real = true;
  out.phi = static_cast<double>(phi);
  out.lambda0 = 1 + scale * boost::multiprecision::cos(phi);
  for (int k = 0; k < 3; ++k) {
    const Real x = 1 + scale * boost::multiprecision::cos(phi + 2 * pi * k / 3);
    out.roots[k] = std::complex<double>(static_cast<double>(x), 0.0);
  }
  return out;
}

ListSize list_size(unsigned delta) {
  if (delta < 4) throw Error(ErrorCode::BadParams, "list_size needs delta >= 4");
  ListSize out;
  out.delta = delta;
  out.lambda0 = char_roots(delta).lambda0;
  out.lambda0_sq = out.lambda0 * out.lambda0;
  const Real target = out.lambda0_sq + Real(0.5);
  out.l = static_cast<long>(boost::multiprecision::ceil(target));
  out.below_five_delta = out.l < 5L * static_cast<long>(delta);
  out.ceiling_margin_ok = out.lambda0_sq <= Real(out.l) - Real(0.5);
  out.chain_margin = static_cast<double>(Real(out.l) - Real(1.5) - out.lambda0_sq);
  out.ratio = static_cast<double>(out.l) / delta;
  return out;
}

Real limit_excess() {
  const Real c = boost::multiprecision::cos(boost::math::constants::pi<Real>() / 6);
  return Real(8) / 3 * c * c - 2;
}

GrowthCertificate growth_certificate(unsigned delta, std::size_t m_max) {
  if (delta < 3) throw Error(ErrorCode::BadParams, "growth_certificate needs delta >= 3");
  if (m_max < 2) throw Error(ErrorCode::BadParams, "m_max must be at least 2");
  GrowthCertificate out;
  out.delta = delta;
  const CubicRoots roots = char_roots(delta);
  out.lambda0 = roots.dominant();
  const auto a = a_sequence(m_max, delta);
  double last_err = 0.0;
  out.errors_shrink = true;
  for (std::size_t k = 1; k < a.size(); ++k) {
    const Real r = Real(a[k]) / Real(a[k - 1]);
    out.ratios.push_back(static_cast<double>(r));
    const double err = static_cast<double>(boost::multiprecision::abs(r - roots.lambda0));
    if (k > 1 && err > last_err) out.errors_shrink = false;
    last_err = err;
  }
  out.final_error = last_err;
  const Real sq = roots.lambda0 * roots.lambda0;
  out.lambda0_sq = static_cast<double>(sq);
  out.l = delta == 3 ? 15 : list_size(delta).l;
  out.lambda0_sq_below_l = sq < Real(out.l);
  out.chain_margin = static_cast<double>(Real(out.l) - Real(1.5) - sq);
  return out;
}

}  // namespace thue
