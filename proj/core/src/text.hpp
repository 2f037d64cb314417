#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace traysight::detail {

std::string_view trim(std::string_view s) noexcept;

/// Splits on LF, dropping a trailing CR from each line. A final empty line
/// after the last LF is not returned.
std::vector<std::string_view> split_lines(std::string_view text);

/// Whitespace-separated tokens.
std::vector<std::string_view> split_ws(std::string_view s);

std::optional<long long> parse_int(std::string_view s) noexcept;
std::optional<std::uint64_t> parse_u64(std::string_view s) noexcept;
/// Finite decimal only; rejects inf/nan and trailing garbage.
std::optional<double> parse_double(std::string_view s) noexcept;

/// Shortest fixed-notation text that parses back to exactly `v`, padded to
/// at least `min_frac` fractional digits.
std::string format_decimal(double v, int min_frac = 6);

/// Fixed notation with exactly `digits` fractional digits.
std::string format_fixed(double v, int digits);

/// `key = value` lines; '#' starts a comment; blank lines skipped.
/// Duplicate keys and lines without '=' are errors.
class KeyValueText {
public:
    explicit KeyValueText(std::string_view text);

    bool has(std::string_view key) const;
    /// Throws MissingKey when absent. Marks the key consumed.
    const std::string& require(std::string_view key);
    std::optional<std::string> take(std::string_view key);
    int require_int(std::string_view key);
    double require_double(std::string_view key);

    /// Throws UnknownKey naming the first key never consumed.
    void reject_unconsumed() const;

private:
    struct Entry {
        std::string value;
        int line = 0;
        bool consumed = false;
    };
    std::map<std::string, Entry, std::less<>> entries_;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view data);

}  // namespace traysight::detail
