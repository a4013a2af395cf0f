#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "microbench/error.hpp"

namespace microbench::metrics {

struct Measurement {
  std::vector<double> samples_ms;
  double median_ms = 0.0;
  /// Max across reps of peak additional bytes allocated during one run;
  /// absent when no allocation hook is linked into this binary.
  std::optional<std::uint64_t> peak_mem_bytes;
};

/// Thrown when the measured work throws; carries the samples collected so far.
class MeasurementAborted : public Error {
 public:
  MeasurementAborted(const std::string& what, std::vector<double> partial)
      : Error(what), partial_samples_ms(std::move(partial)) {}

  std::vector<double> partial_samples_ms;
};

/// Standard median; even length averages the middle pair. Throws on empty.
double median(std::vector<double> xs);

/// Runs `work` reps times sequentially on the calling thread, wall-clocked
/// with a monotonic clock. reps defaults to 5 and the median is reported.
Measurement measure(const std::function<void()>& work, int reps = 5);

/// True when the linked allocation hook can observe heap usage.
bool memory_probe_available();

}  // namespace microbench::metrics
