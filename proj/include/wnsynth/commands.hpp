#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "wnsynth/config.hpp"

namespace wnsynth {

class ReviewService;

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitRuntimeError = 2,
};

/// Maps the in-flight exception to an exit code and prints a diagnostic.
/// Call only from inside a catch block.
int report_current_exception(std::ostream& err);

int cmd_build(const std::filesystem::path& config, const ConfigOverrides& overrides,
              std::ostream& out, std::ostream& err);

int cmd_stats(const std::filesystem::path& export_file, std::optional<std::size_t> pwn_total,
              bool json, std::ostream& out, std::ostream& err);

int cmd_sample(const std::filesystem::path& export_file, std::size_t n, std::uint64_t seed,
               const std::filesystem::path& output, std::ostream& out, std::ostream& err);

/// Blocks until the service stops. `on_started` runs once the socket is
/// bound, with the service and its port.
int cmd_serve(const std::filesystem::path& export_file, const std::filesystem::path& ratings,
              const std::string& bind_address, std::ostream& out, std::ostream& err,
              const std::function<void(ReviewService&, int)>& on_started = {});

}  // namespace wnsynth
