#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace trajlet {

/// Machine-readable failure categories. CLI exit codes and error output
/// are derived from these; library code throws `Error` with one of them.
enum class Errc {
  degenerate_trajectory,
  length_mismatch,
  empty_sequence,
  zero_displacement,
  zero_spectrum,
  sequence_too_long,
  non_finite_activation,
  tape_mismatch,
  zero_embedding,
  non_finite_loss,
  too_few_vectors,
  unknown_id,
  empty_candidates,
  missing_labels,
  bank_too_large,
  waypoint_count_mismatch,
  parse_error,
  usage_error,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::degenerate_trajectory: return "DegenerateTrajectory";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::empty_sequence: return "EmptySequence";
    case Errc::zero_displacement: return "ZeroDisplacement";
    case Errc::zero_spectrum: return "ZeroSpectrum";
    case Errc::sequence_too_long: return "SequenceTooLong";
    case Errc::non_finite_activation: return "NonFiniteActivation";
    case Errc::tape_mismatch: return "TapeMismatch";
    case Errc::zero_embedding: return "ZeroEmbedding";
    case Errc::non_finite_loss: return "NonFiniteLoss";
    case Errc::too_few_vectors: return "TooFewVectors";
    case Errc::unknown_id: return "UnknownId";
    case Errc::empty_candidates: return "EmptyCandidates";
    case Errc::missing_labels: return "MissingLabels";
    case Errc::bank_too_large: return "BankTooLarge";
    case Errc::waypoint_count_mismatch: return "WaypointCountMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::usage_error: return "UsageError";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace trajlet
