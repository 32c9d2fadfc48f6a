#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace crosswalk::detail {

/// RFC 3986 percent-encoding; keeps unreserved characters, escapes the rest
/// byte-wise with uppercase hex.
std::string percent_encode(std::string_view text);

/// Inverse of percent_encode; nullopt on truncated or non-hex escapes.
std::optional<std::string> percent_decode(std::string_view text);

/// "scheme:..." with an alphanumeric scheme.
bool is_absolute_uri(std::string_view text);

} // namespace crosswalk::detail
