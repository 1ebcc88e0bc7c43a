#include "coinfrac/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "coinfrac/analysis.hpp"
#include "coinfrac/embed.hpp"
#include "coinfrac/errors.hpp"
#include "coinfrac/ifs.hpp"

namespace coinfrac {

namespace {

std::string fmt_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::int64_t parse_int_field(std::string_view field, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument(std::string("csv: bad ") + what + " '" +
                                    std::string(field) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(text.substr(pos));
            return out;
        }
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
}

} // namespace

void RenderSpec::validate() const {
    if (width < 16 || height < 16)
        throw std::invalid_argument("render: width and height must be at least 16");
    if (!(margin >= 0.0 && margin <= 0.45))
        throw std::invalid_argument("render: margin must lie in [0, 0.45]");
}

std::string to_csv(const DivisionSet& divisions) {
    std::string out;
    for (int i = 1; i <= divisions.players; ++i) {
        out += "n_";
        out += std::to_string(i);
        out += ',';
    }
    out += "multiplicity\n";
    for (const auto& [point, mult] : divisions.points) {
        for (const auto share : point) {
            out += std::to_string(share);
            out += ',';
        }
        out += std::to_string(mult);
        out += '\n';
    }
    return out;
}

DivisionSet parse_csv(std::string_view text) {
    std::vector<std::string_view> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty())
        lines.pop_back(); // final LF
    if (lines.empty())
        throw std::invalid_argument("csv: missing header");

    const std::vector<std::string_view> header = split(lines.front(), ',');
    if (header.size() < 2 || header.back() != "multiplicity")
        throw std::invalid_argument("csv: header must be n_1,...,n_s,multiplicity");
    const int players = static_cast<int>(header.size()) - 1;
    for (int i = 0; i < players; ++i)
        if (header[static_cast<std::size_t>(i)] != "n_" + std::to_string(i + 1))
            throw std::invalid_argument("csv: header must be n_1,...,n_s,multiplicity");

    DivisionSet out;
    out.players = players;
    bool have_total = false;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        const std::vector<std::string_view> fields = split(lines[row], ',');
        if (fields.size() != header.size())
            throw std::invalid_argument("csv: row has the wrong number of fields");
        DivisionPoint point(static_cast<std::size_t>(players));
        std::int64_t sum = 0;
        for (int i = 0; i < players; ++i) {
            point[static_cast<std::size_t>(i)] =
                parse_int_field(fields[static_cast<std::size_t>(i)], "share");
            if (point[static_cast<std::size_t>(i)] < 0)
                throw std::invalid_argument("csv: negative share");
            sum += point[static_cast<std::size_t>(i)];
        }
        const std::int64_t mult = parse_int_field(fields.back(), "multiplicity");
        if (mult < 1)
            throw std::invalid_argument("csv: multiplicity must be >= 1");
        if (!have_total) {
            out.total = sum;
            have_total = true;
        } else if (sum != out.total) {
            throw std::invalid_argument("csv: rows have inconsistent share totals");
        }
        if (!out.points.emplace(std::move(point), mult).second)
            throw std::invalid_argument("csv: duplicate point");
    }
    return out;
}

namespace {

struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
    std::int64_t mult = 1;
};

// Isometric embedding followed by the fixed plane projection:
// two players sit on a line (y = 0), four players drop the third
// embedded coordinate.
std::vector<PlanePoint> project_to_plane(const DivisionSet& divisions) {
    if (divisions.points.empty())
        throw std::invalid_argument("render: no points");
    if (divisions.players < 2 || divisions.players > 4)
        throw std::invalid_argument("render: only 2, 3 or 4 players are renderable");
    std::vector<PlanePoint> out;
    out.reserve(divisions.points.size());
    for (const auto& [emb, mult] : embed_set(divisions)) {
        PlanePoint p;
        p.x = emb.coords[0];
        p.y = emb.coords.size() > 1 ? emb.coords[1] : 0.0;
        p.mult = mult;
        out.push_back(p);
    }
    return out;
}

struct Viewport {
    int x0, x1, y0, y1; // inclusive drawable pixel ranges
    double xmin, xmax, ymin, ymax;

    Viewport(const std::vector<PlanePoint>& points, const RenderSpec& spec) {
        x0 = static_cast<int>(std::floor(spec.margin * spec.width));
        x1 = spec.width - 1 - x0;
        y0 = static_cast<int>(std::floor(spec.margin * spec.height));
        y1 = spec.height - 1 - y0;
        xmin = xmax = points.front().x;
        ymin = ymax = points.front().y;
        for (const auto& p : points) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }

    // Continuous pixel coordinates; the bounding box maps onto
    // [x0, x1] x [y0, y1] with the y axis pointing up.
    double fx(double x) const {
        if (xmax == xmin)
            return (x0 + x1) / 2.0;
        return x0 + (x - xmin) / (xmax - xmin) * (x1 - x0);
    }
    double fy(double y) const {
        if (ymax == ymin)
            return (y0 + y1) / 2.0;
        return y0 + (ymax - y) / (ymax - ymin) * (y1 - y0);
    }
};

} // namespace

Image render(const DivisionSet& divisions, const RenderSpec& spec) {
    spec.validate();
    const std::vector<PlanePoint> points = project_to_plane(divisions);
    const Viewport view(points, spec);

    Image img;
    img.width = spec.width;
    img.height = spec.height;
    img.pixels.assign(static_cast<std::size_t>(spec.width) * spec.height, 0);

    const std::int64_t max_mult =
        spec.mode == RenderSpec::ValueMode::Multiplicity ? divisions.max_multiplicity() : 1;

    // Track the strongest multiplicity per pixel; binning ties resolve by floor.
    std::vector<std::int64_t> strongest(img.pixels.size(), 0);
    for (const auto& p : points) {
        const int col = static_cast<int>(std::floor(view.fx(p.x)));
        const int row = static_cast<int>(std::floor(view.fy(p.y)));
        auto& slot = strongest[static_cast<std::size_t>(row) * spec.width + col];
        slot = std::max(slot, spec.mode == RenderSpec::ValueMode::Binary ? 1 : p.mult);
    }
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        if (strongest[i] == 0)
            continue;
        img.pixels[i] = spec.mode == RenderSpec::ValueMode::Binary
                            ? 255
                            : static_cast<std::uint8_t>(std::llround(
                                  255.0 * static_cast<double>(strongest[i]) /
                                  static_cast<double>(max_mult)));
    }
    return img;
}

std::string to_pgm(const Image& image) {
    std::string out = "P5\n" + std::to_string(image.width) + " " +
                      std::to_string(image.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(image.pixels.data()), image.pixels.size());
    return out;
}

std::string to_svg(const DivisionSet& divisions, const RenderSpec& spec) {
    spec.validate();
    const std::vector<PlanePoint> points = project_to_plane(divisions);
    const Viewport view(points, spec);
    const std::int64_t max_mult =
        spec.mode == RenderSpec::ValueMode::Multiplicity ? divisions.max_multiplicity() : 1;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
           "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
           std::to_string(spec.height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    char buf[160];
    for (const auto& p : points) {
        int gray = 0; // black in binary mode, darker = higher multiplicity otherwise
        if (spec.mode == RenderSpec::ValueMode::Multiplicity)
            gray = 255 - static_cast<int>(std::llround(
                             255.0 * static_cast<double>(p.mult) / static_cast<double>(max_mult)));
        std::snprintf(buf, sizeof(buf),
                      "<circle cx=\"%.4f\" cy=\"%.4f\" r=\"1.5\" fill=\"rgb(%d,%d,%d)\"/>\n",
                      view.fx(p.x), view.fy(p.y), gray, gray, gray);
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

std::string analyze_report(const GeometricFamilySpec& spec, int players, std::int64_t cap) {
    const DivisionSet divisions = construct_inductive(spec, players, cap);
    const DimensionResult dim = similarity_dimension(spec.base(), spec.coins_each(), players);
    const RamificationClass cls = classify(spec.base(), spec.coins_each());
    const bool complete = is_complete(make_geometric(spec));

    std::string out;
    out += "family: " + std::to_string(spec.base()) + "," + std::to_string(spec.coins_each()) +
           "," + std::to_string(spec.levels()) + "\n";
    out += "players: " + std::to_string(players) + "\n";
    out += "amount: " + std::to_string(spec.amount()) + "\n";
    out += "points: " + std::to_string(divisions.size()) + "\n";
    out += "max_multiplicity: " + std::to_string(divisions.max_multiplicity()) + "\n";
    out += "dimension: " + (dim.defined ? fmt_g12(dim.value) : std::string("undefined: overlap")) +
           "\n";
    out += "class: " + std::string(to_string(cls)) + "\n";
    out += std::string("complete: ") + (complete ? "true" : "false") + "\n";
    return out;
}

std::string convergence_report(std::int64_t base, std::int64_t coins_each, int players,
                               std::int64_t m_max, std::int64_t cap) {
    if (m_max < 2)
        throw std::invalid_argument("convergence: m_max must be >= 2");
    std::string out;
    double previous = 0.0;
    RationalPointSet current =
        scale(construct_inductive(GeometricFamilySpec(base, coins_each, 1), players, cap),
              GeometricFamilySpec(base, coins_each, 1));
    for (std::int64_t m = 1; m < m_max; ++m) {
        const GeometricFamilySpec next_spec(base, coins_each, m + 1);
        RationalPointSet next = scale(construct_inductive(next_spec, players, cap), next_spec);
        const double distance = hausdorff_distance(current, next);
        out += "m=" + std::to_string(m) + " dH=" + fmt_g12(distance);
        if (m > 1) {
            char buf[48];
            std::snprintf(buf, sizeof(buf), " ratio=%.6f", distance / previous);
            out += buf;
        }
        out += "\n";
        previous = distance;
        current = std::move(next);
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("read failure on '" + path.string() + "'");
    return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out)
        throw IoError("write failure on '" + path.string() + "'");
}

} // namespace coinfrac
