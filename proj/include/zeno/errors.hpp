#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

/// Malformed or inconsistent input (config schema, shape mismatches, bad probabilities).
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

/// Negative dissipation rate or non-PSD noise coefficient matrix.
struct MarkovianityError : std::runtime_error {
  explicit MarkovianityError(const std::string& what) : std::runtime_error(what) {}
};

/// Control Hamiltonian violates the resonance condition required by the Zeno-limit formulas.
struct ResonanceError : std::runtime_error {
  explicit ResonanceError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal numerical-consistency failure (non-finite exponential, imaginary survival, ...).
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A formula's validity condition does not apply (e.g. zero denominator in a frequency threshold).
struct ConditionInapplicableError : std::runtime_error {
  explicit ConditionInapplicableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zeno
