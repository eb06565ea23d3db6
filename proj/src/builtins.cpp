#include "gfan/builtins.hpp"

#include <array>
#include <utility>

namespace gfan {

namespace {

// Mirrors the files under data/.
constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kBuiltins = {{
    {"a2", R"(# linear A2: 1 -> 2
vertices 2
arrow a 1 2
prime 32003
)"},
    {"a3", R"(# linear A3: 1 -> 2 -> 3
vertices 3
arrow a 1 2
arrow b 2 3
prime 32003
)"},
    {"kronecker2", R"(# Kronecker quiver with two parallel arrows 1 => 2
vertices 2
arrow a 1 2
arrow b 1 2
prime 32003
)"},
    {"kronecker3", R"(# three parallel arrows 1 => 2
vertices 2
arrow a 1 2
arrow b 1 2
arrow c 1 2
prime 32003
)"},
    {"cycle3", R"(# oriented 3-cycle alpha: 1->2, beta: 2->3, gamma: 3->1.
# Paths compose left to right, so the cube of the 3-cycle at vertex 2,
# written right to left as (alpha gamma beta)^3, is the word below.
vertices 3
arrow alpha 1 2
arrow beta 2 3
arrow gamma 3 1
relation 1*beta.gamma.alpha.beta.gamma.alpha.beta.gamma.alpha
prime 32003
)"},
    {"semisimple2", R"(# two vertices, no arrows
vertices 2
prime 32003
)"},
}};

}  // namespace

std::optional<std::string> builtin_algebra_text(std::string_view name) {
  for (const auto& [key, text] : kBuiltins)
    if (key == name) return std::string(text);
  return std::nullopt;
}

std::vector<std::string> builtin_algebra_names() {
  std::vector<std::string> names;
  for (const auto& entry : kBuiltins) names.emplace_back(entry.first);
  return names;
}

}  // namespace gfan
