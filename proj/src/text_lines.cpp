#include "sepcodes/text_lines.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

#include "sepcodes/errors.hpp"

namespace sepcodes {

namespace {

bool is_comment(const std::string& line) {
    const auto it = std::find_if(line.begin(), line.end(), [](unsigned char c) { return !std::isspace(c); });
    return it != line.end() && *it == '#';
}

}  // namespace

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

std::optional<std::string> LineReader::next_content_line() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!is_blank(line) && !is_comment(line)) {
            return line;
        }
    }
    return std::nullopt;
}

std::optional<std::string> LineReader::next_non_comment_line() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!is_comment(line)) {
            return is_blank(line) ? std::string{} : line;
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> parse_unsigned_fields(const std::string& line, std::size_t line_number) {
    std::vector<std::size_t> out;
    std::istringstream is(line);
    std::string token;
    while (is >> token) {
        std::size_t value = 0;
        const auto* first = token.data();
        const auto* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last) {
            throw ParseError(line_number, "expected a non-negative integer, got \"" + token + "\"");
        }
        out.push_back(value);
    }
    return out;
}

}  // namespace sepcodes
