#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sepcodes {

/// Line-oriented reader shared by the graph and test-cover parsers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next line that is neither blank nor a '#' comment.
    std::optional<std::string> next_content_line();
    /// Next line that is not a '#' comment; blank lines are returned as "".
    std::optional<std::string> next_non_comment_line();

    std::size_t line_number() const noexcept { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

bool is_blank(const std::string& line);

/// Whitespace-separated non-negative integers; throws ParseError otherwise.
std::vector<std::size_t> parse_unsigned_fields(const std::string& line, std::size_t line_number);

}  // namespace sepcodes
