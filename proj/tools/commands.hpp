#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace pickwick::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

struct Outcome {
  json result;
  int exit_code = kExitOk;
};

const std::vector<std::string>& command_names();

/// Embedded schema for a command ("scenario" for the run wrapper).
const json& schema_for(const std::string& name);

/// Runs a validated payload. Library errors propagate as pickwick::Error.
Outcome dispatch(const std::string& command, const json& payload, std::optional<std::uint64_t> seed);

}  // namespace pickwick::cli
