#pragma once

#include <string>
#include <vector>

namespace pickwick::io {

/// Registered golden-file suites.
const std::vector<std::string>& fixture_suites();

/// Deterministic fixture text (pretty-printed JSON, trailing newline).
/// Throws InvalidArgument for an unknown suite.
std::string fixture_emit(const std::string& suite);

}  // namespace pickwick::io
