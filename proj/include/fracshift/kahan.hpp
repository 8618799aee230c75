#pragma once

#include <complex>

namespace fracshift {

/// Kahan compensated accumulator. Works for double and std::complex<double>
/// (compensation applies componentwise through complex arithmetic).
template <typename Value>
struct KahanAccumulator {
  Value sum{};
  Value compensation{};

  void add(const Value& value) {
    const Value y = value - compensation;
    const Value t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }

  KahanAccumulator& operator+=(const Value& value) {
    add(value);
    return *this;
  }

  const Value& value() const { return sum; }
};

using KahanReal = KahanAccumulator<double>;
using KahanComplex = KahanAccumulator<std::complex<double>>;

}  // namespace fracshift
