#pragma once

namespace pizza {

// Compensated (Kahan) accumulator: the rounding error of each addition is
// captured and fed back into the next one.
template <typename T>
struct KahanAccumulator {
  T sum{};
  T compensation{};

  KahanAccumulator& operator+=(T value) {
    const T y = value - compensation;
    const T t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
    return *this;
  }

  T value() const { return sum; }
};

}  // namespace pizza
