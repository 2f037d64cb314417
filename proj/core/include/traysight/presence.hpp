#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "traysight/imaging.hpp"
#include "traysight/tray_grid.hpp"

namespace traysight {

struct SlotReference {
    double value_with = 0.0;
    double value_without = 0.0;

    bool operator==(const SlotReference&) const = default;
};

/// Per-slot reference intensities for the occupied and empty classes,
/// bound to the layout they were measured with.
class PresenceReferenceSet {
public:
    /// Throws SlotCountMismatch, InvalidValue (non-finite or outside [0, 255])
    /// or DegenerateCalibration (with == without in some slot).
    PresenceReferenceSet(TrayLayout layout, std::vector<SlotReference> slots);

    const TrayLayout& layout() const noexcept { return layout_; }
    const std::vector<SlotReference>& slots() const noexcept { return slots_; }
    const SlotReference& slot(std::size_t i) const { return slots_.at(i); }

    bool operator==(const PresenceReferenceSet&) const = default;

private:
    TrayLayout layout_;
    std::vector<SlotReference> slots_;
};

struct OccupancyResult {
    std::vector<std::uint8_t> bits;      ///< 1 = module present
    std::vector<std::uint8_t> warnings;  ///< 1 = reading far from both references
    std::vector<double> values;          ///< measured mean intensity per slot

    std::size_t size() const noexcept { return bits.size(); }
    std::string bitstring() const;
};

inline constexpr double kDefaultOutlierK = 4.0;

/// Mean intensity inside slot `index` of `img`.
double slot_value(const GrayImage& img, const TrayLayout& layout, std::size_t index);

PresenceReferenceSet calibrate_presence(const GrayImage& with_image, const GrayImage& without_image,
                                        const TrayLayout& layout);

/// Nearest-reference rule: occupied iff strictly closer to the occupied
/// reference. Ties resolve to empty.
bool classify_slot(double value_unknown, double value_with, double value_without) noexcept;

/// Classifies every slot of `image`. A slot is flagged (bit unchanged) when
/// its distance to the nearer reference exceeds outlier_k * |with - without|.
OccupancyResult inspect_tray(const GrayImage& image, const TrayLayout& layout,
                             const PresenceReferenceSet& refs,
                             double outlier_k = kDefaultOutlierK);

std::string save_presence_refs(const PresenceReferenceSet& refs);
PresenceReferenceSet load_presence_refs(std::string_view text);

}  // namespace traysight
