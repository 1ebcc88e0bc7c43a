#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coinfrac/analysis.hpp"
#include "coinfrac/embed.hpp"
#include "coinfrac/enumerate.hpp"
#include "coinfrac/errors.hpp"
#include "coinfrac/ifs.hpp"
#include "coinfrac/io.hpp"

namespace py = pybind11;
using namespace coinfrac;

namespace {

py::dict to_dict(const DivisionSet& divisions) {
    py::dict out;
    for (const auto& [point, mult] : divisions.points)
        out[py::tuple(py::cast(point))] = mult;
    return out;
}

DivisionSet from_dict(const py::dict& points, int players) {
    DivisionSet out;
    out.players = players;
    bool first = true;
    for (const auto& item : points) {
        const auto point = item.first.cast<std::vector<std::int64_t>>();
        const auto mult = item.second.cast<std::int64_t>();
        if (static_cast<int>(point.size()) != players)
            throw std::invalid_argument("division point has the wrong number of shares");
        if (mult < 1)
            throw std::invalid_argument("multiplicities must be >= 1");
        const auto total = std::accumulate(point.begin(), point.end(), std::int64_t{0});
        if (first) {
            out.total = total;
            first = false;
        } else if (total != out.total) {
            throw std::invalid_argument("division points disagree on the total amount");
        }
        out.points.emplace(point, mult);
    }
    return out;
}

RenderSpec make_render_spec(int width, int height, double margin, const std::string& mode) {
    RenderSpec spec;
    spec.width = width;
    spec.height = height;
    spec.margin = margin;
    if (mode == "multiplicity")
        spec.mode = RenderSpec::ValueMode::Multiplicity;
    else if (mode == "binary")
        spec.mode = RenderSpec::ValueMode::Binary;
    else
        throw std::invalid_argument("mode must be 'binary' or 'multiplicity'");
    return spec;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Divisions of coin sets among players and their fractal structure";

    py::register_exception<ResourceCapError>(m, "ResourceCapError", PyExc_RuntimeError);

    py::class_<CoinSet>(m, "CoinSet")
        .def(py::init([](const std::vector<std::pair<std::int64_t, std::int64_t>>& entries) {
                 std::vector<CoinEntry> converted;
                 converted.reserve(entries.size());
                 for (const auto& [value, count] : entries)
                     converted.push_back({value, count});
                 return CoinSet(std::move(converted));
             }),
             py::arg("entries"), "Build from a list of (value, count) pairs.")
        .def_static("parse", &CoinSet::parse, py::arg("text"))
        .def("format", &CoinSet::format)
        .def_property_readonly("amount", &CoinSet::amount)
        .def_property_readonly("entries",
                               [](const CoinSet& s) {
                                   std::vector<std::pair<std::int64_t, std::int64_t>> out;
                                   for (const auto& e : s.entries())
                                       out.emplace_back(e.value, e.count);
                                   return out;
                               })
        .def(py::self == py::self)
        .def("__repr__",
             [](const CoinSet& s) { return "CoinSet('" + s.format() + "')"; });

    py::class_<GeometricFamilySpec>(m, "GeometricFamily")
        .def(py::init<std::int64_t, std::int64_t, std::int64_t>(), py::arg("base"),
             py::arg("coins_each"), py::arg("levels"))
        .def_property_readonly("base", &GeometricFamilySpec::base)
        .def_property_readonly("coins_each", &GeometricFamilySpec::coins_each)
        .def_property_readonly("levels", &GeometricFamilySpec::levels)
        .def_property_readonly("scale_power", &GeometricFamilySpec::scale_power)
        .def_property_readonly("amount", &GeometricFamilySpec::amount)
        .def(py::self == py::self)
        .def("__repr__", [](const GeometricFamilySpec& s) {
            return "GeometricFamily(" + std::to_string(s.base()) + ", " +
                   std::to_string(s.coins_each()) + ", " + std::to_string(s.levels()) + ")";
        });

    py::class_<DimensionResult>(m, "DimensionResult")
        .def_readonly("defined", &DimensionResult::defined)
        .def_readonly("value", &DimensionResult::value)
        .def_readonly("map_count", &DimensionResult::map_count)
        .def_readonly("inverse_ratio", &DimensionResult::inverse_ratio)
        .def("__repr__", [](const DimensionResult& d) {
            return d.defined ? "DimensionResult(" + std::to_string(d.value) + ")"
                             : std::string("DimensionResult(undefined)");
        });

    m.def("make_geometric", &make_geometric, py::arg("family"));
    m.def("make_cent", &make_cent);

    m.def(
        "enumerate_divisions",
        [](const CoinSet& coins, int players, std::int64_t cap) {
            return to_dict(enumerate_divisions(coins, players, cap));
        },
        py::arg("coins"), py::arg("players"), py::arg("cap") = kDefaultTupleCap,
        "Brute-force division map: share tuple -> multiplicity.");

    m.def(
        "construct_inductive",
        [](const GeometricFamilySpec& family, int players, std::int64_t cap) {
            return to_dict(construct_inductive(family, players, cap));
        },
        py::arg("family"), py::arg("players"), py::arg("cap") = kDefaultTupleCap,
        "Same division map built by the translate-and-union recursion.");

    m.def(
        "generator_set",
        [](std::int64_t degree, int players) {
            py::list out;
            for (const auto& point : generator_set(degree, players).points)
                out.append(py::tuple(py::cast(point)));
            return out;
        },
        py::arg("degree"), py::arg("players"));

    m.def("similarity_dimension", &similarity_dimension, py::arg("base"), py::arg("coins_each"),
          py::arg("players") = 3);
    m.def("cantor_dimension", &cantor_dimension, py::arg("base"));
    m.def(
        "classify", [](std::int64_t r, std::int64_t c) { return std::string(to_string(classify(r, c))); },
        py::arg("base"), py::arg("coins_each"));

    m.def("is_complete", &is_complete, py::arg("coins"));
    m.def(
        "first_unreachable",
        [](const CoinSet& coins) { return first_unreachable(coins); }, py::arg("coins"));

    m.def(
        "cantor_phi",
        [](std::int64_t m_levels, const std::vector<std::int64_t>& point) {
            const Rational value = cantor_phi(m_levels, point);
            return std::make_pair(value.num(), value.den());
        },
        py::arg("levels"), py::arg("point"),
        "Exact image of a two-player point as a (numerator, denominator) pair.");

    m.def(
        "is_cantor_digit_string",
        [](std::int64_t num, std::int64_t den, std::int64_t base) {
            return is_cantor_digit_string(Rational(num, den), base);
        },
        py::arg("numerator"), py::arg("denominator"), py::arg("base"));

    m.def(
        "embed",
        [](const std::vector<std::int64_t>& point, int players) {
            return embed(point, players).coords;
        },
        py::arg("point"), py::arg("players"),
        "Isometric coordinates of one share vector in R^(players-1).");

    m.def(
        "hausdorff_distance",
        [](const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
            return hausdorff_distance(a, b);
        },
        py::arg("a"), py::arg("b"));

    m.def(
        "scaled_embedded_points",
        [](const GeometricFamilySpec& family, int players, std::int64_t cap) {
            const DivisionSet divisions = construct_inductive(family, players, cap);
            const double scale_factor = 1.0 / static_cast<double>(family.scale_power());
            std::vector<std::vector<double>> out;
            out.reserve(divisions.size());
            for (const auto& [point, mult] : embed_set(divisions)) {
                (void)mult;
                std::vector<double> coords = point.coords;
                for (double& x : coords)
                    x *= scale_factor;
                out.push_back(std::move(coords));
            }
            return out;
        },
        py::arg("family"), py::arg("players"), py::arg("cap") = kDefaultTupleCap,
        "Embedded coordinates of the scaled level, ready for plotting.");

    m.def(
        "convergence_distances",
        [](std::int64_t base, std::int64_t coins_each, int players, std::int64_t m_max,
           std::int64_t cap) {
            if (m_max < 2)
                throw std::invalid_argument("m_max must be >= 2");
            std::vector<double> out;
            GeometricFamilySpec level(base, coins_each, 1);
            RationalPointSet current = scale(construct_inductive(level, players, cap), level);
            for (std::int64_t m = 1; m < m_max; ++m) {
                const GeometricFamilySpec next(base, coins_each, m + 1);
                RationalPointSet stepped = scale(construct_inductive(next, players, cap), next);
                out.push_back(hausdorff_distance(current, stepped));
                current = std::move(stepped);
            }
            return out;
        },
        py::arg("base"), py::arg("coins_each"), py::arg("players"), py::arg("m_max"),
        py::arg("cap") = kDefaultTupleCap,
        "Hausdorff distances between successive scaled levels.");

    m.def(
        "to_csv", [](const py::dict& points, int players) { return to_csv(from_dict(points, players)); },
        py::arg("points"), py::arg("players"));

    m.def(
        "parse_csv",
        [](const std::string& text) {
            const DivisionSet divisions = parse_csv(text);
            return std::make_pair(divisions.players, to_dict(divisions));
        },
        py::arg("text"), "Returns (players, {share tuple: multiplicity}).");

    m.def(
        "render_pgm",
        [](const py::dict& points, int players, int width, int height, double margin,
           const std::string& mode) {
            const std::string pgm =
                to_pgm(render(from_dict(points, players), make_render_spec(width, height, margin, mode)));
            return py::bytes(pgm);
        },
        py::arg("points"), py::arg("players"), py::arg("width") = 512, py::arg("height") = 512,
        py::arg("margin") = 0.05, py::arg("mode") = "binary");

    m.def(
        "render_svg",
        [](const py::dict& points, int players, int width, int height, double margin,
           const std::string& mode) {
            return to_svg(from_dict(points, players), make_render_spec(width, height, margin, mode));
        },
        py::arg("points"), py::arg("players"), py::arg("width") = 512, py::arg("height") = 512,
        py::arg("margin") = 0.05, py::arg("mode") = "binary");

    m.def("analyze_report", &analyze_report, py::arg("family"), py::arg("players"),
          py::arg("cap") = kDefaultTupleCap);
    m.def("convergence_report", &convergence_report, py::arg("base"), py::arg("coins_each"),
          py::arg("players"), py::arg("m_max"), py::arg("cap") = kDefaultTupleCap);
}
