#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "microbench/error.hpp"

namespace microbench::report {

/// One (circuit, backend) row of results.csv. Output metrics are optional:
/// a failed external pair leaves them empty.
struct BenchmarkRecord {
  std::string circuit;
  std::string backend;
  int qubits = 0;
  int depth_in = 0;
  std::optional<int> depth_out;
  int twoq_in = 0;
  std::optional<int> twoq_out;
  std::optional<int> gates_out;
  std::optional<double> time_ms_median;
  std::optional<std::uint64_t> peak_mem_bytes;
  std::uint64_t seed = 0;

  bool operator==(const BenchmarkRecord&) const = default;
};

struct SummaryStats {
  std::optional<double> mean_depth;
  std::optional<double> mean_twoq;
  std::optional<double> mean_time_ms;
  std::optional<double> mean_mem;
  int circuit_count = 0;
};

struct RunMeta {
  std::uint64_t seed = 0;
  int reps = 0;
  std::string coupling;
  std::string version;
  std::string timestamp;
  /// "<circuit>/<backend>" -> ok | failed | verify_failed | unverified.
  std::map<std::string, std::string> pair_status;
};

/// UTF-8 CSV with the fixed header
/// circuit,backend,qubits,depth_in,depth_out,twoq_in,twoq_out,gates_out,time_ms_median,peak_mem_bytes,seed
/// one row per record in (circuit, backend) lexicographic order, reals with 3
/// decimals, absent values as empty fields. Throws on empty input, duplicate
/// (circuit, backend) pairs, or an unwritable path.
void write_csv(const std::vector<BenchmarkRecord>& records, const std::filesystem::path& path);

/// Parses a file produced by write_csv back into records.
std::vector<BenchmarkRecord> read_csv(const std::filesystem::path& path);

/// Per-backend means over that backend's records. Optional fields average
/// the present values and stay absent when no record carries one. All reals
/// are rounded to 3 decimals before averaging, matching the CSV contents.
std::map<std::string, SummaryStats> summarize(const std::vector<BenchmarkRecord>& records);

/// JSON: {"backends": {name: stats...}, "run": metadata}.
void write_summary(const std::vector<BenchmarkRecord>& records, const std::filesystem::path& path,
                   const RunMeta& meta);

/// Static grouped bar chart of depth_out: one bar per (circuit, backend),
/// legend per backend, byte-deterministic for identical input. Records with
/// absent depth_out contribute no bar; depth 0 yields a zero-height bar.
void render_depth_svg(const std::vector<BenchmarkRecord>& records,
                      const std::filesystem::path& path);

}  // namespace microbench::report
