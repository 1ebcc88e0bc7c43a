#include <charconv>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coinfrac/coin_set.hpp"
#include "coinfrac/enumerate.hpp"
#include "coinfrac/errors.hpp"
#include "coinfrac/ifs.hpp"
#include "coinfrac/io.hpp"

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t count,
                                         const char* what) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(',', pos);
        const std::string_view field(text.data() + pos,
                                     (next == std::string::npos ? text.size() : next) - pos);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw std::invalid_argument(std::string(what) + ": bad integer '" +
                                        std::string(field) + "'");
        out.push_back(value);
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    if (out.size() != count)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(count) +
                                    " comma-separated integers");
    return out;
}

void parse_size(const std::string& text, int& width, int& height) {
    const std::size_t sep = text.find('x');
    if (sep == std::string::npos)
        throw std::invalid_argument("--size: expected WxH, e.g. 512x512");
    const auto parse_dim = [&](std::string_view field) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw std::invalid_argument("--size: bad dimension '" + std::string(field) + "'");
        return value;
    };
    width = parse_dim(std::string_view(text).substr(0, sep));
    height = parse_dim(std::string_view(text).substr(sep + 1));
}

void emit(const std::string& out_path, const std::string& bytes) {
    if (out_path.empty())
        std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    else
        coinfrac::write_file(out_path, bytes);
}

bool ends_with(const std::string& text, std::string_view suffix) {
    return text.size() >= suffix.size() &&
           text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisions of coin sets and their fractal structure"};
    app.require_subcommand(1);

    std::string family, coins, method = "enumerate", in_path, out_path;
    std::string size = "512x512", mode = "binary";
    int players = 3;
    double margin = 0.05;
    std::int64_t cap = coinfrac::kDefaultTupleCap;
    std::int64_t m_max = 0;

    auto* generate = app.add_subcommand("generate", "enumerate a division set and emit CSV");
    generate->add_option("--family", family, "geometric family as r,c,m");
    generate->add_option("--coins", coins, "explicit coin set as value:count,...");
    generate->add_option("--players", players, "number of players")->check(CLI::PositiveNumber);
    generate->add_option("--method", method, "construction method")
        ->check(CLI::IsMember({"enumerate", "inductive"}));
    generate->add_option("--out", out_path, "output CSV path (default stdout)");
    generate->add_option("--cap", cap, "resource cap")->check(CLI::PositiveNumber);

    auto* render = app.add_subcommand("render", "rasterize a division-set CSV to a PGM image");
    render->add_option("--in", in_path, "input CSV path")->required();
    render->add_option("--out", out_path, "output image path (.svg selects SVG)")->required();
    render->add_option("--size", size, "image size as WxH (default 512x512)");
    render->add_option("--mode", mode, "pixel value mode")
        ->check(CLI::IsMember({"binary", "multiplicity"}));
    render->add_option("--margin", margin, "viewport inset fraction (default 0.05)");

    auto* analyze = app.add_subcommand("analyze", "report fractal statistics for a family");
    analyze->add_option("--family", family, "geometric family as r,c,m")->required();
    analyze->add_option("--players", players, "number of players")->check(CLI::PositiveNumber);
    analyze->add_option("--out", out_path, "output path (default stdout)");
    analyze->add_option("--cap", cap, "resource cap")->check(CLI::PositiveNumber);

    auto* convergence =
        app.add_subcommand("convergence", "Hausdorff distances between successive scaled levels");
    convergence->add_option("--family", family, "geometric family as r,c (all levels)")
        ->required();
    convergence->add_option("--players", players, "number of players")
        ->check(CLI::PositiveNumber);
    convergence->add_option("--mmax", m_max, "largest level to construct")->required();
    convergence->add_option("--out", out_path, "output path (default stdout)");
    convergence->add_option("--cap", cap, "resource cap")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(generate)) {
            if (family.empty() == coins.empty())
                throw std::invalid_argument("generate: exactly one of --family or --coins");
            coinfrac::DivisionSet divisions;
            if (!family.empty()) {
                const auto f = parse_int_list(family, 3, "--family");
                const coinfrac::GeometricFamilySpec spec(f[0], f[1], f[2]);
                divisions = method == "inductive"
                                ? coinfrac::construct_inductive(spec, players, cap)
                                : coinfrac::enumerate_divisions(coinfrac::make_geometric(spec),
                                                                players, cap);
            } else {
                if (method == "inductive")
                    throw std::invalid_argument(
                        "generate: --method inductive requires --family");
                divisions = coinfrac::enumerate_divisions(coinfrac::CoinSet::parse(coins),
                                                          players, cap);
            }
            emit(out_path, coinfrac::to_csv(divisions));
        } else if (app.got_subcommand(render)) {
            coinfrac::RenderSpec render_spec;
            parse_size(size, render_spec.width, render_spec.height);
            render_spec.margin = margin;
            render_spec.mode = mode == "multiplicity"
                                   ? coinfrac::RenderSpec::ValueMode::Multiplicity
                                   : coinfrac::RenderSpec::ValueMode::Binary;
            const coinfrac::DivisionSet divisions =
                coinfrac::parse_csv(coinfrac::read_file(in_path));
            if (ends_with(out_path, ".svg"))
                coinfrac::write_file(out_path, coinfrac::to_svg(divisions, render_spec));
            else
                coinfrac::write_file(out_path,
                                     coinfrac::to_pgm(coinfrac::render(divisions, render_spec)));
        } else if (app.got_subcommand(analyze)) {
            const auto f = parse_int_list(family, 3, "--family");
            emit(out_path, coinfrac::analyze_report(coinfrac::GeometricFamilySpec(f[0], f[1], f[2]),
                                                    players, cap));
        } else if (app.got_subcommand(convergence)) {
            const auto f = parse_int_list(family, 2, "--family");
            emit(out_path, coinfrac::convergence_report(f[0], f[1], players, m_max, cap));
        }
    } catch (const coinfrac::ResourceCapError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const coinfrac::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
