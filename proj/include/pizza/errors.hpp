#pragma once

#include <stdexcept>

namespace pizza {

/// Base class for all domain and numerical failures raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Offset distance outside its admissible range.
class InvalidOffset : public Error {
 public:
  using Error::Error;
};

/// Offset so close to 1 that the series tail bounds blow up.
class NearSingularOffset : public Error {
 public:
  using Error::Error;
};

/// Adaptive integration ran out of its evaluation budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// Frequency zero requested where the spectrum formula needs m != 0.
class ZeroFrequency : public Error {
 public:
  using Error::Error;
};

/// Even half-slice count passed to a series operation that needs odd n.
class EvenN : public Error {
 public:
  using Error::Error;
};

/// Half-slice count 1 passed to a series operation that needs n > 1.
class NEqualsOne : public Error {
 public:
  using Error::Error;
};

/// Series term caps hit before the truncation target was reached.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace pizza
