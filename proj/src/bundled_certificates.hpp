#pragma once

#include <span>
#include <string_view>

namespace sumgraph::detail {

struct BundledFile
{
    std::string_view name;
    std::string_view content;
};

/// Certificate JSON files compiled in from data/certificates/.
auto bundled_certificates() -> std::span<const BundledFile>;

} // namespace sumgraph::detail
