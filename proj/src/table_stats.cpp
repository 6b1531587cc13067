#include "cfrplus/table_stats.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <map>

namespace cfrplus {

namespace {

constexpr std::uint8_t kMagic[8] = {'C', 'F', 'R', 'S', 'N', 'A', 'P', '\0'};
constexpr std::uint32_t kFormatVersion = 1;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& out, double v) {
  put_u64(out, std::bit_cast<std::uint64_t>(v));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(take(4)); }
  std::uint64_t u64() { return take(8); }
  double f64() { return std::bit_cast<double>(take(8)); }

  bool exhausted() const { return pos_ == bytes_.size(); }
  std::size_t remaining() const { return bytes_.size() - pos_; }

  void expect_magic() {
    if (remaining() < sizeof(kMagic)) {
      throw SnapshotTruncatedError("snapshot truncated before the magic");
    }
    if (std::memcmp(bytes_.data(), kMagic, sizeof(kMagic)) != 0) {
      throw SnapshotFormatError("not a solver snapshot (bad magic)");
    }
    pos_ += sizeof(kMagic);
  }

 private:
  std::uint64_t take(std::size_t n) {
    if (remaining() < n) {
      throw SnapshotTruncatedError("snapshot truncated");
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    }
    pos_ += n;
    return v;
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

TableStats stats(std::span<const double> values, double quantizer) {
  if (!(quantizer > 0.0)) {
    throw std::invalid_argument("stats: quantizer must be > 0");
  }
  TableStats result;
  result.entries = values.size();
  if (values.empty()) return result;

  std::size_t zeros = 0;
  // Ordered so the entropy sum is independent of the entry order.
  std::map<long long, std::size_t> symbol_counts;
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("stats: non-finite table entry");
    }
    if (v == 0.0) ++zeros;
    ++symbol_counts[std::llround(v / quantizer)];
  }
  result.zero_fraction = static_cast<double>(zeros) / static_cast<double>(values.size());

  double entropy = 0.0;
  const double total = static_cast<double>(values.size());
  for (const auto& [symbol, count] : symbol_counts) {
    const double p = static_cast<double>(count) / total;
    entropy -= p * std::log2(p);
  }
  result.entropy_bits_per_entry = entropy;
  return result;
}

std::vector<std::uint8_t> snapshot(const Solver& solver) {
  const GameTree& tree = solver.tree();
  std::vector<std::uint8_t> out;
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put_u32(out, kFormatVersion);
  put_u32(out, static_cast<std::uint32_t>(tree.deck_size()));
  put_u64(out, tree.fingerprint());
  put_u64(out, static_cast<std::uint64_t>(solver.iteration()));
  for (int p = 0; p < kNumPlayers; ++p) {
    for (const ActionTable* table : {&solver.regrets(p), &solver.averages(p)}) {
      const auto entries = table->entries();
      put_u64(out, entries.size());
      for (double v : entries) put_f64(out, v);
    }
  }
  return out;
}

Solver restore_snapshot(const GameTree& tree, const SolverConfig& config,
                        std::span<const std::uint8_t> bytes) {
  Reader reader(bytes);
  reader.expect_magic();

  const std::uint32_t version = reader.u32();
  if (version != kFormatVersion) {
    throw SnapshotVersionError("unsupported snapshot version " + std::to_string(version));
  }
  const std::uint32_t deck_size = reader.u32();
  const std::uint64_t rule_hash = reader.u64();
  if (deck_size != static_cast<std::uint32_t>(tree.deck_size()) ||
      rule_hash != tree.fingerprint()) {
    throw SnapshotMismatchError("snapshot was taken from a different game");
  }
  const std::uint64_t iteration = reader.u64();

  Solver solver(tree, config);
  std::array<ActionTable, 2> regrets;
  std::array<ActionTable, 2> averages;
  for (int p = 0; p < kNumPlayers; ++p) {
    regrets[p] = ActionTable(tree, p);
    averages[p] = ActionTable(tree, p);
    for (ActionTable* table : {&regrets[p], &averages[p]}) {
      const std::uint64_t count = reader.u64();
      auto entries = table->entries();
      if (count != entries.size()) {
        throw SnapshotMismatchError("snapshot table shape does not fit the game");
      }
      for (std::uint64_t i = 0; i < count; ++i) entries[i] = reader.f64();
    }
  }
  if (!reader.exhausted()) {
    throw SnapshotFormatError("trailing bytes after the last table");
  }

  solver.restore(static_cast<int>(iteration), std::move(regrets), std::move(averages));
  return solver;
}

}  // namespace cfrplus
