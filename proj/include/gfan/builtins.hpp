#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gfan {

/// Algebra files compiled into the binary: a2, a3, kronecker2, kronecker3,
/// cycle3, semisimple2.
std::optional<std::string> builtin_algebra_text(std::string_view name);
std::vector<std::string> builtin_algebra_names();

}  // namespace gfan
