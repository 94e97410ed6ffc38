#pragma once

#include <stdexcept>

namespace vxl {

// Exit-code contract of the CLI: DomainError and its children map to exit 2,
// ResonanceError and its children to exit 3, failed invariants to exit 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};

// Infinite product did not reach the truncation floor within max_terms.
struct NonConvergent : DomainError {
  using DomainError::DomainError;
};

struct ResonanceError : Error {
  using Error::Error;
};

// A phi factor with negative multiplicity vanished.
struct PoleHit : ResonanceError {
  using ResonanceError::ResonanceError;
};

struct NonSimplePole : ResonanceError {
  using ResonanceError::ResonanceError;
};

// Evaluation point too close to the x_i/x_j in q^Z locus.
struct NearDiagonal : ResonanceError {
  using ResonanceError::ResonanceError;
};

struct SingularError : ResonanceError {
  using ResonanceError::ResonanceError;
};

}  // namespace vxl
