#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "coinfrac/coin_set.hpp"
#include "coinfrac/division.hpp"
#include "coinfrac/enumerate.hpp"

namespace coinfrac {

/// Raster parameters for rendering a division set to an image.
struct RenderSpec {
    enum class ValueMode {
        Binary,       ///< 0 background, 255 on any occupied pixel
        Multiplicity, ///< linear gray ramp scaled to the maximum multiplicity
    };

    int width = 512;
    int height = 512;
    double margin = 0.05; ///< viewport inset as a fraction of each edge
    ValueMode mode = ValueMode::Binary;

    /// width, height >= 16 and margin in [0, 0.45]; throws std::invalid_argument.
    void validate() const;
};

/// 8-bit grayscale raster, row-major, row 0 at the top.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

/// CSV text form: header `n_1,...,n_s,multiplicity`, one row per point in
/// ascending lexicographic order, LF line endings, no trailing whitespace.
std::string to_csv(const DivisionSet& divisions);

/// Parses the CSV form back; throws std::invalid_argument on malformed
/// input (bad header, ragged rows, negative shares, inconsistent totals).
DivisionSet parse_csv(std::string_view text);

/// Renders a division set: embeds the points isometrically, projects to
/// the plane (players=2 maps to a centered row, players=4 drops the third
/// embedded coordinate), fits the bounding box into the margin-inset
/// viewport and bins by floor. Throws std::invalid_argument for an empty
/// set or players outside {2,3,4}.
Image render(const DivisionSet& divisions, const RenderSpec& spec);

/// Binary PGM (P5, maxval 255) encoding of an image.
std::string to_pgm(const Image& image);

/// Deterministic SVG 1.1 scatter plot, one circle per point.
std::string to_svg(const DivisionSet& divisions, const RenderSpec& spec);

/// Key:value report for a family: point count, max multiplicity,
/// similarity dimension (or `undefined: overlap`), ramification class and
/// completeness.
std::string analyze_report(const GeometricFamilySpec& spec, int players,
                           std::int64_t cap = kDefaultTupleCap);

/// One line per level m in [1, m_max): the Hausdorff distance between the
/// scaled sets at levels m and m+1, and from the second line on the ratio
/// to the previous distance.
std::string convergence_report(std::int64_t base, std::int64_t coins_each, int players,
                               std::int64_t m_max, std::int64_t cap = kDefaultTupleCap);

/// Whole-file helpers; throw IoError on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

} // namespace coinfrac
