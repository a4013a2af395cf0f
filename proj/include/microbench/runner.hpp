#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "microbench/transpile.hpp"

namespace microbench::runner {

enum class CouplingKind { Linear, Ring, Grid };

std::optional<CouplingKind> coupling_from_name(std::string_view name);
const char* coupling_name(CouplingKind kind);

/// Coupling map of the named family sized to n qubits. Grid is 2 x ceil(n/2).
CouplingMap make_coupling(CouplingKind kind, std::uint32_t n);

/// A backend is either a built-in pipeline level ("L0"/"L1"/"L2") or an
/// external command ("external:<command...>") speaking QASM on stdio.
struct BackendSpec {
  std::string display;
  bool builtin = true;
  transpile::PipelineLevel level = transpile::PipelineLevel::L0_route_only;
  std::vector<std::string> command;

  static BackendSpec parse(const std::string& spec);
};

enum class Availability { Available, Missing };

/// Built-in levels are always available; external commands are probed by
/// resolving the executable (PATH search or direct access check).
Availability detect(const BackendSpec& backend);

struct RunConfig {
  std::filesystem::path out_dir = "results";
  std::vector<std::string> backends = {"L0", "L1", "L2"};
  std::vector<std::string> circuits = {"all"};
  int reps = 5;
  std::uint64_t seed = 42;
  CouplingKind coupling = CouplingKind::Linear;
  bool verify = true;
  bool pin_cpu = false;
};

inline constexpr std::chrono::seconds kExternalTimeout{60};

/// Runs the full benchmark grid and writes results.csv, summary.json and
/// depth.svg into out_dir. Returns 0 on full success, 2 when a backend was
/// skipped or an external pair failed or failed verification, 1 on hard
/// errors (invalid config, unwritable output, built-in verification failure).
int run(const RunConfig& config);

}  // namespace microbench::runner
