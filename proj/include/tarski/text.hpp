#ifndef TARSKI_TEXT_HPP
#define TARSKI_TEXT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tarski::text {

/// Parses `{a->b, c->d, ...}`; tokens are runs of [0-9A-Za-z_]. Throws
/// Error(parse_error) with the offending position.
std::vector<std::pair<std::string, std::string>> parse_arrow_list(std::string_view text);

/// Parses `[a, b, ...]` (also accepts `{a, b}`).
std::vector<std::string> parse_word_list(std::string_view text);

std::string trim(std::string_view text);

} // namespace tarski::text

#endif
