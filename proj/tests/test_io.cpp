#include "doctest.h"

#include "fixtures.hpp"
#include "nhr/errors.hpp"
#include "nhr/io.hpp"
#include "nhr/modal.hpp"

using namespace nhr;

TEST_CASE("matrix json parse and canonical form") {
    const std::string text = R"({"n": 2, "entries": [[[1,0],[0,-2]],[[0.5,0],[3,4]]]})";
    ComplexMatrix m = parse_matrix_json(text);
    CHECK(m.dim() == 2);
    CHECK(m(0, 1) == Complex(0, -2));
    CHECK(m(1, 0) == Complex(0.5, 0));

    const std::string canonical = format_matrix_json(m);
    ComplexMatrix again = parse_matrix_json(canonical);
    CHECK(max_abs_diff(m, again) == 0.0);
    CHECK(format_matrix_json(again) == canonical);
}

TEST_CASE("matrix json rejections") {
    CHECK_THROWS_AS(parse_matrix_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json(R"({"n": 0, "entries": []})"), ParseError);
    CHECK_THROWS_AS(parse_matrix_json(R"({"entries": [[[1,0]]]})"), ParseError);
    // ragged row
    CHECK_THROWS_AS(parse_matrix_json(R"({"n": 2, "entries": [[[1,0],[2,0]],[[3,0]]]})"), ParseError);
    // non-finite entry
    CHECK_THROWS_AS(parse_matrix_json(R"({"n": 1, "entries": [[[1e999,0]]]})"), ParseError);
    // malformed pair
    CHECK_THROWS_AS(parse_matrix_json(R"({"n": 1, "entries": [[[1]]]})"), ParseError);
}

TEST_CASE("csv-reim escape hatch") {
    ComplexMatrix m = parse_matrix_csv_reim("1,0,2,-1\n0,0.5,3,0\n");
    CHECK(m.dim() == 2);
    CHECK(m(0, 1) == Complex(2, -1));
    CHECK(m(1, 0) == Complex(0, 0.5));

    CHECK_THROWS_AS(parse_matrix_csv_reim(""), ParseError);
    CHECK_THROWS_AS(parse_matrix_csv_reim("1,2,3\n4,5,6\n"), ParseError);   // odd columns
    CHECK_THROWS_AS(parse_matrix_csv_reim("1,x\n"), ParseError);
}

TEST_CASE("modes document round-trips byte identically") {
    ModalExpansion exp = flv_expand(fixtures::f1_ep(), Complex(1.0));
    const std::string text = format_modes_document(modes_document(exp));
    ModesDocument doc = parse_modes_document(text);
    CHECK(format_modes_document(doc) == text);
    CHECK(doc.n == 3);
    CHECK(doc.omega == Complex(1.0, 0.0));
    CHECK(max_abs_diff(doc.modes[0], exp.modes[0]) == 0.0);
}

TEST_CASE("number formatting round-trips") {
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0 / 3.0) == "0.33333333333333331");
    const double tricky = 0.1 + 0.2;
    CHECK(std::stod(format_double(tricky)) == tricky);
}

TEST_CASE("digest is stable") {
    CHECK(fnv1a_digest("") == "cbf29ce484222325");
    CHECK(fnv1a_digest("a") != fnv1a_digest("b"));
    CHECK(fnv1a_digest("abc") == fnv1a_digest("abc"));
}
