#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "wythoff/beatty.hpp"
#include "wythoff/cli.hpp"
#include "wythoff/explore.hpp"
#include "wythoff/grundy.hpp"
#include "wythoff/verify.hpp"

namespace py = pybind11;
using namespace wythoff;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
template <class R>
std::string dump(const R& report) {
    return to_json(report).dump();
}

BuildOrder parse_order(const std::string& name) {
    if (name == "row-major") return BuildOrder::RowMajor;
    if (name == "wavefront") return BuildOrder::Wavefront;
    throw std::invalid_argument("order must be 'row-major' or 'wavefront'");
}

py::tuple as_tuple(Position p) { return py::make_tuple(p.low(), p.high()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sprague-Grundy engine for Wythoff's game and its R/E variants";

    py::register_exception<std::length_error>(m, "TableTooLarge", PyExc_MemoryError);

    m.def("beatty_a", &beatty_a, py::arg("n"));
    m.def("beatty_b", &beatty_b, py::arg("n"));
    m.def(
        "classify",
        [](std::uint64_t v) {
            const auto c = classify(v);
            return py::make_tuple(std::string(to_string(c.kind)), c.index);
        },
        py::arg("v"), "('A' | 'B', n) with v = a(n) or v = b(n)");

    py::class_<GameRule>(m, "GameRule")
        .def_static("wythoff", &GameRule::wythoff)
        .def_static("r_wythoff", &GameRule::r_wythoff)
        .def_static("e_wythoff", &GameRule::e_wythoff)
        .def_static(
            "generalized",
            [](const std::string& k_set, const std::string& l_set, const std::string& relation,
               const std::string& name) {
                return GameRule::generalized({IntSet::parse(k_set), IntSet::parse(l_set), Relation::parse(relation)},
                                             name);
            },
            py::arg("k_set") = "all", py::arg("l_set") = "all", py::arg("relation") = "any", py::arg("name") = "")
        .def_static("parse", &parse_game, py::arg("text"))
        .def_static("load", &load_rule_config, py::arg("path"))
        .def_property_readonly("name", &GameRule::name)
        .def("config_text", &rule_config_text)
        .def("__eq__", [](const GameRule& a, const GameRule& b) { return a == b; })
        .def("__repr__", [](const GameRule& r) { return "GameRule(" + r.name() + ")"; });

    m.def(
        "followers",
        [](const GameRule& rule, std::uint64_t a, std::uint64_t b) {
            py::list out;
            for (const auto& p : followers(rule, Position(a, b))) out.append(as_tuple(p));
            return out;
        },
        py::arg("rule"), py::arg("a"), py::arg("b"));
    m.def(
        "winning_moves",
        [](const GameRule& rule, std::uint64_t a, std::uint64_t b) {
            py::list out;
            for (const auto& m : winning_moves(rule, Position(a, b))) {
                py::dict d;
                d["kind"] = std::string(to_string(m.move.kind));
                d["take_low"] = m.move.take_low;
                d["take_high"] = m.move.take_high;
                d["description"] = m.move.describe();
                d["result"] = as_tuple(m.result);
                out.append(d);
            }
            return out;
        },
        py::arg("rule"), py::arg("a"), py::arg("b"));
    m.def("is_p_position", [](std::uint64_t a, std::uint64_t b) { return is_p_position_oracle(Position(a, b)); });

    py::class_<GrundyTable>(m, "GrundyTable")
        .def_property_readonly("bound", &GrundyTable::bound)
        .def_property_readonly("rows", &GrundyTable::rows)
        .def_property_readonly("rule", &GrundyTable::rule)
        .def("__call__", [](const GrundyTable& t, std::uint64_t a, std::uint64_t b) { return t.at(Position(a, b)); })
        .def("row", &GrundyTable::row, py::arg("a"))
        .def(
            "csv",
            [](const GrundyTable& t, bool both_orders) {
                std::ostringstream out;
                write_csv(out, t, both_orders);
                return out.str();
            },
            py::arg("both_orders") = false);

    m.def(
        "build_table",
        [](const GameRule& rule, std::uint64_t bound, const std::string& order, unsigned threads) {
            py::gil_scoped_release release;
            return build_table(rule, bound, {parse_order(order), threads});
        },
        py::arg("rule"), py::arg("bound"), py::arg("order") = "row-major", py::arg("threads") = 0);
    m.def(
        "build_strip",
        [](const GameRule& rule, std::uint64_t rows, std::uint64_t bound) {
            py::gil_scoped_release release;
            return build_strip(rule, rows, bound);
        },
        py::arg("rule"), py::arg("rows"), py::arg("bound"));

    m.def("_verify_p_positions", [](const GameRule& r, std::uint64_t n) { return dump(verify_p_positions(r, n)); });
    m.def("_verify_value1", [](const GameRule& r, std::uint64_t n) { return dump(verify_value1(r, n)); });
    m.def("_verify_bounds", [](const GameRule& r, std::uint64_t n) { return dump(verify_bounds(r, n)); });
    m.def("_verify_small_rows", [](const GameRule& r, std::uint64_t n) { return dump(verify_small_row_formulas(r, n)); });
    m.def("_verify_no_redundant_moves", [](std::uint64_t k) { return dump(verify_no_redundant_moves(k)); });
    m.def("_verify_row_existence", [](const GameRule& r, std::uint64_t a, std::uint64_t c, std::uint64_t b) {
        return dump(verify_row_existence(r, a, c, b));
    });
    m.def("_verify_diagonal_uniqueness", [](std::uint64_t a, std::uint64_t c, std::uint64_t b) {
        return dump(verify_diagonal_uniqueness(a, c, b));
    });
    m.def("_verify_golden_tables", [] { return dump(verify_golden_tables()); });

    m.def(
        "find_additive_period",
        [](const std::vector<Grundy>& s) -> py::object {
            const auto p = find_additive_period(s);
            if (!p) return py::none();
            return py::make_tuple(p->period, p->preperiod);
        },
        py::arg("sequence"), "(p, n0) or None");
    m.def("_mine_additive_period",
          [](const GameRule& r, std::uint64_t a, std::uint64_t b) { return dump(mine_additive_period(r, a, b)); });
    m.def("_check_conjecture_bw_upper2", [](std::uint64_t n) { return dump(check_conjecture_bw_upper2(n)); });
    m.def("_check_conjecture_ew_diagonals", [](std::uint64_t n) { return dump(check_conjecture_ew_diagonals(n)); });
    m.def("_survey_value1", [](const GameRule& r, std::uint64_t n) { return dump(survey_value1(r, n)); });

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "(exit code, stdout, stderr)");
}
