#include "nonstatic/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "nonstatic/errors.hpp"

namespace nonstatic {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kParameterDomain: return "parameter_domain";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kCapability: return "capability";
    case ErrorKind::kUndefinedStatistics: return "undefined_statistics";
    case ErrorKind::kAccuracy: return "accuracy";
  }
  return "unknown";
}

double ModelParams::c3() const noexcept {
  const double magnitude = std::sqrt(std::max(0.0, c1 * c2 - 1.0));
  return c3_sign == C3Sign::kPositive ? magnitude : -magnitude;
}

namespace {

[[noreturn]] void reject(const char* field, const char* constraint, double value) {
  std::ostringstream os;
  os.precision(17);
  os << field << " = " << value << " violates " << constraint;
  throw ParameterError(field, constraint, os.str());
}

}  // namespace

void ModelParams::validate() const {
  if (!(std::isfinite(epsilon) && epsilon > 0.0)) reject("epsilon", "epsilon > 0", epsilon);
  if (!(std::isfinite(omega) && omega > 0.0)) reject("omega", "omega > 0", omega);
  if (!(std::isfinite(hbar) && hbar > 0.0)) reject("hbar", "hbar > 0", hbar);
  if (!(std::isfinite(c1) && c1 > 0.0)) reject("c1", "c1 > 0", c1);
  if (!(std::isfinite(c2) && c2 > 0.0)) reject("c2", "c2 > 0", c2);
  // c1*c2 = 1 exactly is allowed; products within rounding of one count as one.
  if (c1 * c2 < 1.0 - 4.0 * std::numeric_limits<double>::epsilon()) {
    std::ostringstream os;
    os.precision(17);
    os << "c1*c2 = " << c1 * c2 << " violates c1*c2 >= 1";
    throw ParameterError("c1", "c1*c2 >= 1", os.str());
  }
  if (!(std::isfinite(phi) && phi >= -kPi / 2 && phi < kPi / 2)) {
    reject("phi", "-pi/2 <= phi < pi/2", phi);
  }
  if (!std::isfinite(t0)) reject("t0", "t0 finite", t0);
}

double wrap_phase(double phi) noexcept {
  double r = std::fmod(phi + kPi / 2, kPi);
  if (r < 0) r += kPi;
  r -= kPi / 2;
  if (r >= kPi / 2) r -= kPi;
  return r;
}

double f_min(const ModelParams& params) noexcept {
  // f_min * f_max = 1; the reciprocal avoids cancellation for large c1 + c2.
  return 1.0 / f_max(params);
}

double f_max(const ModelParams& params) noexcept {
  const double mid = 0.5 * (params.c1 + params.c2);
  return mid + std::sqrt(std::max(0.0, mid * mid - 1.0));
}

}  // namespace nonstatic
