#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cfrplus/solver.hpp"

namespace cfrplus {

/// Order-0 statistics of a table's entry stream. The zero fraction counts
/// entries that are exactly 0.0 before quantization; the entropy is measured
/// over round(entry / quantizer) symbol frequencies.
struct TableStats {
  std::size_t entries = 0;
  double zero_fraction = 0.0;
  double entropy_bits_per_entry = 0.0;
};

inline constexpr double kDefaultQuantizer = 1e-6;

TableStats stats(std::span<const double> values, double quantizer = kDefaultQuantizer);

inline TableStats stats(const ActionTable& table, double quantizer = kDefaultQuantizer) {
  return stats(table.entries(), quantizer);
}

class SnapshotError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The stream does not start with the snapshot magic, or carries junk after
/// the last table.
class SnapshotFormatError : public SnapshotError {
 public:
  using SnapshotError::SnapshotError;
};

class SnapshotVersionError : public SnapshotError {
 public:
  using SnapshotError::SnapshotError;
};

class SnapshotTruncatedError : public SnapshotError {
 public:
  using SnapshotError::SnapshotError;
};

/// The snapshot was taken from a different game (deck size or rule hash
/// mismatch) or its table shapes do not fit the tree.
class SnapshotMismatchError : public SnapshotError {
 public:
  using SnapshotError::SnapshotError;
};

/// Deterministic versioned binary encoding of a solver's state: magic,
/// format version, game fingerprint (deck size + rule hash), iteration
/// counter, then per player the regret and cumulative-strategy tables as
/// entry count plus little-endian IEEE-754 doubles. Round-trips bit-exactly.
std::vector<std::uint8_t> snapshot(const Solver& solver);

/// Rebuilds a solver from a snapshot taken on an identical game. Throws the
/// SnapshotError subclasses above on bad magic, version mismatch, truncation,
/// or game mismatch.
Solver restore_snapshot(const GameTree& tree, const SolverConfig& config,
                        std::span<const std::uint8_t> bytes);

}  // namespace cfrplus
