#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

#include "wilsoncg/lattice.hpp"

namespace wilsoncg::cli {

// Process exit codes, one per failure class.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kConfigError = 3,
  kIoError = 4,
  kSolverError = 5,
  kNotConverged = 6,
  kCheckFailed = 7,
  kInvalidInput = 8,
  kInternalError = 9,
};

enum class GenKind { gauge, point_source, random_source };

int cmd_solve(const std::filesystem::path& config_path, std::ostream& out);
int cmd_bench(const std::filesystem::path& config_path, int sweeps, std::ostream& out);
int cmd_trace(const std::filesystem::path& config_path, const std::filesystem::path& out_path,
              std::optional<std::int64_t> sites, std::ostream& out);
int cmd_verify(const std::filesystem::path& config_path, std::ostream& out);
int cmd_gen(const Coords& dims, std::uint64_t seed, const std::filesystem::path& out_path, GenKind kind,
            std::ostream& out);

}  // namespace wilsoncg::cli
