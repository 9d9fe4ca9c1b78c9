#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gobs/sets.hpp"
#include "gobs/zak.hpp"

namespace gobs {

// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);
// 17 significant digits.
std::string format_double17(double v);

// CSV emitters. Deterministic byte-for-byte: canonical input order, LF line
// endings, shortest round-trip decimals.
void write_enum_p_csv(std::ostream& os, const std::vector<ObstructionParams>& pts);
void write_enum_h_csv(std::ostream& os, const std::vector<HyperbolicSegment>& segs);
void write_scan_csv(std::ostream& os, const ScanResult& res);

// SVG emitters: one element of class "pt" per point record and one of class
// "seg" per segment record; tile boundary curves carry class "tile".
// Segments are colored by their ab value, or by r on a log scale.
enum class SegmentColor { by_ab, by_r };

void write_enum_p_svg(std::ostream& os, const std::vector<ObstructionParams>& pts);
void write_enum_h_svg(std::ostream& os, const std::vector<HyperbolicSegment>& segs,
                      bool tile_overlay, SegmentColor color = SegmentColor::by_ab);

}  // namespace gobs
