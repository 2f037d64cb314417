#include <gtest/gtest.h>

#include <set>

#include "traysight/error.hpp"
#include "traysight/tray_grid.hpp"

namespace traysight {
namespace {

constexpr const char* kLayoutText =
    "rows=4\ncols=5\norigin_x=10\norigin_y=12\npitch_x=60\npitch_y=80\nslot_w=50\nslot_h=70";

ErrorCode parse_error(const std::string& text) {
    try {
        parse_layout(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "parse succeeded";
    return ErrorCode::Io;
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
    text.replace(text.find(from), from.size(), to);
    return text;
}

TEST(ParseLayout, DirectParse) {
    EXPECT_EQ(parse_layout(kLayoutText), (TrayLayout{4, 5, 10, 12, 60, 80, 50, 70}));
}

TEST(ParseLayout, CommentsWhitespaceAndCrlf) {
    const std::string text =
        "# tray A\r\n rows = 4 \r\ncols\t=\t5 # five across\r\n\r\norigin_x = 10\r\norigin_y = 12\r\n"
        "pitch_x = 60\r\npitch_y = 80\r\nslot_w = 50\r\nslot_h = 70\r\n";
    EXPECT_EQ(parse_layout(text), (TrayLayout{4, 5, 10, 12, 60, 80, 50, 70}));
}

TEST(ParseLayout, FormatRoundTrips) {
    const TrayLayout l{3, 7, 0, 4, 11, 9, 11, 2};
    EXPECT_EQ(parse_layout(format_layout(l)), l);
}

TEST(ParseLayout, Errors) {
    EXPECT_EQ(parse_error(replace(kLayoutText, "slot_w=50", "slot_w=70")), ErrorCode::InvariantViolation);
    EXPECT_EQ(parse_error(replace(kLayoutText, "rows=4\n", "")), ErrorCode::MissingKey);
    EXPECT_EQ(parse_error(replace(kLayoutText, "rows=4", "rows=4.5")), ErrorCode::InvalidValue);
    EXPECT_EQ(parse_error(replace(kLayoutText, "rows=4", "rows=four")), ErrorCode::InvalidValue);
    EXPECT_EQ(parse_error(std::string(kLayoutText) + "\nangle=3"), ErrorCode::UnknownKey);
    EXPECT_EQ(parse_error(std::string(kLayoutText) + "\nrows=3"), ErrorCode::DuplicateKey);
    EXPECT_EQ(parse_error(std::string(kLayoutText) + "\njunk"), ErrorCode::MalformedLine);
    EXPECT_EQ(parse_error(replace(kLayoutText, "rows=4", "rows=0")), ErrorCode::InvariantViolation);
    EXPECT_EQ(parse_error(replace(kLayoutText, "origin_x=10", "origin_x=-1")), ErrorCode::InvariantViolation);
}

TEST(ParseLayout, ErrorNamesTheKey) {
    try {
        parse_layout(replace(kLayoutText, "rows=4\n", ""));
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("rows"), std::string::npos);
    }
    try {
        parse_layout(replace(kLayoutText, "pitch_y=80", "pitch_y=x"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("pitch_y"), std::string::npos);
    }
}

TEST(SlotRect, RowMajorIndexing) {
    const auto l = parse_layout(kLayoutText);
    EXPECT_EQ(slot_rect(l, 0), (Rect{10, 12, 50, 70}));
    EXPECT_EQ(slot_rect(l, 5), (Rect{10, 92, 50, 70}));
    EXPECT_EQ(slot_rect(l, 4), (Rect{250, 12, 50, 70}));
    EXPECT_EQ(slot_rect(l, 19), (Rect{250, 252, 50, 70}));
    EXPECT_THROW(slot_rect(l, 20), Error);
}

TEST(SlotRect, ScanOrderAndNoOverlap) {
    const TrayLayout l{6, 4, 3, 5, 9, 7, 9, 6};
    std::set<std::pair<int, int>> covered;
    for (std::size_t i = 0; i < l.slot_count(); ++i) {
        const auto r = slot_rect(l, i);
        if (i > 0) {
            const auto p = slot_rect(l, i - 1);
            // Same row moves right; new row moves down and back to the left edge.
            if (i % 4 != 0) {
                EXPECT_EQ(r.y, p.y);
                EXPECT_GT(r.x, p.x);
            } else {
                EXPECT_GT(r.y, p.y);
                EXPECT_EQ(r.x, l.origin_x);
            }
        }
        for (int y = r.y; y < r.y + r.h; ++y) {
            for (int x = r.x; x < r.x + r.w; ++x) EXPECT_TRUE(covered.insert({x, y}).second);
        }
    }
    EXPECT_EQ(l.extent_x(), 3 + 3 * 9 + 9);
    EXPECT_EQ(l.extent_y(), 5 + 5 * 7 + 6);
}

TEST(RequireFits, ChecksExtent) {
    const auto l = parse_layout(kLayoutText);
    EXPECT_NO_THROW(require_fits(l, GrayImage(300, 322, std::uint8_t{0})));
    EXPECT_THROW(require_fits(l, GrayImage(299, 322, std::uint8_t{0})), Error);
    EXPECT_THROW(require_fits(l, GrayImage(300, 321, std::uint8_t{0})), Error);
}

}  // namespace
}  // namespace traysight
