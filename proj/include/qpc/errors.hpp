#pragma once

#include <stdexcept>
#include <string>

namespace qpc {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// hermitian_eigensystem: symmetry check failed.
class NotHermitian : public Error {
public:
    using Error::Error;
};

// hermitian_eigensystem: iterative solver did not converge.
class NoConvergence : public Error {
public:
    using Error::Error;
};

// Vector/matrix sizes inconsistent with the declared Fock cutoff.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A state that must be normalized is not.
class NotNormalized : public Error {
public:
    using Error::Error;
};

// Coherent-state truncation tail (or Fock-occupancy guard) above tolerance.
class CutoffTooSmall : public Error {
public:
    using Error::Error;
};

// Blockwise propagation requested with the resonance flag unset.
class NotResonant : public Error {
public:
    using Error::Error;
};

class UnknownPreset : public Error {
public:
    using Error::Error;
};

// Invalid scenario configuration (CLI flags or JSON config file).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Blockwise and full propagators disagree beyond tolerance on an emitted scalar.
class OracleMismatch : public Error {
public:
    OracleMismatch(double t, std::string field, double delta)
        : Error("oracle mismatch at t=" + std::to_string(t) + " in " + field +
                ", |delta|=" + std::to_string(delta)),
          t(t), field(std::move(field)), delta(delta) {}

    double t;
    std::string field;
    double delta;
};

}  // namespace qpc
