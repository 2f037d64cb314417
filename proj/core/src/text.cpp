#include "text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "traysight/error.hpp"

namespace traysight::detail {

namespace {

bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

}  // namespace

std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_space(s[i])) ++i;
        std::size_t j = i;
        while (j < s.size() && !is_space(s[j])) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<long long> parse_int(std::string_view s) noexcept {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::optional<std::uint64_t> parse_u64(std::string_view s) noexcept {
    s = trim(s);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::optional<double> parse_double(std::string_view s) noexcept {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

std::string format_decimal(double v, int min_frac) {
    char buf[512];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
    if (ec != std::errc{}) throw Error(ErrorCode::InvalidValue, "cannot format decimal");
    std::string out(buf, ptr);
    auto dot = out.find('.');
    if (dot == std::string::npos) {
        out.push_back('.');
        dot = out.size() - 1;
    }
    const auto frac = static_cast<int>(out.size() - dot - 1);
    if (frac < min_frac) out.append(static_cast<std::size_t>(min_frac - frac), '0');
    return out;
}

std::string format_fixed(double v, int digits) {
    char buf[512];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
    if (ec != std::errc{}) throw Error(ErrorCode::InvalidValue, "cannot format decimal");
    return {buf, ptr};
}

KeyValueText::KeyValueText(std::string_view text) {
    int lineno = 0;
    for (auto raw : split_lines(text)) {
        ++lineno;
        auto line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::MalformedLine,
                        "line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        auto key = std::string(trim(line.substr(0, eq)));
        auto value = std::string(trim(line.substr(eq + 1)));
        if (key.empty()) {
            throw Error(ErrorCode::MalformedLine, "line " + std::to_string(lineno) + ": empty key");
        }
        if (entries_.count(key) != 0) {
            throw Error(ErrorCode::DuplicateKey, "'" + key + "' at line " + std::to_string(lineno));
        }
        entries_.emplace(std::move(key), Entry{std::move(value), lineno, false});
    }
}

bool KeyValueText::has(std::string_view key) const { return entries_.find(key) != entries_.end(); }

const std::string& KeyValueText::require(std::string_view key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw Error(ErrorCode::MissingKey, "'" + std::string(key) + "'");
    it->second.consumed = true;
    return it->second.value;
}

std::optional<std::string> KeyValueText::take(std::string_view key) {
    if (!has(key)) return std::nullopt;
    return require(key);
}

int KeyValueText::require_int(std::string_view key) {
    const auto& text = require(key);
    auto v = parse_int(text);
    if (!v || *v < INT32_MIN || *v > INT32_MAX) {
        throw Error(ErrorCode::InvalidValue,
                    "'" + std::string(key) + "' must be an integer, got '" + text + "'");
    }
    return static_cast<int>(*v);
}

double KeyValueText::require_double(std::string_view key) {
    const auto& text = require(key);
    auto v = parse_double(text);
    if (!v) {
        throw Error(ErrorCode::InvalidValue,
                    "'" + std::string(key) + "' must be a finite decimal, got '" + text + "'");
    }
    return *v;
}

void KeyValueText::reject_unconsumed() const {
    for (const auto& [key, entry] : entries_) {
        if (!entry.consumed) {
            throw Error(ErrorCode::UnknownKey,
                        "'" + key + "' at line " + std::to_string(entry.line));
        }
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw Error(ErrorCode::FileNotFound, path.string());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw Error(ErrorCode::Io, "read failed: " + path.string());
    return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot open for writing: " + path.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw Error(ErrorCode::Io, "write failed: " + path.string());
}

}  // namespace traysight::detail
