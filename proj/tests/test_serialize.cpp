#include "randcolor/serialize.hpp"

#include <doctest.h>

#include "test_util.hpp"

#include <filesystem>

using namespace randcolor;
using namespace randcolor::experiments;

namespace {

std::vector<RegimeRow> sample_rows(std::size_t trials)
{
    FamilySpec f{GraphFamily::parse("star"), ColoringRule::parse("ratios:3/4,1/4"), {40, 80}};
    return run_regime(f, trials, 4).rows;
}

} // namespace

TEST_CASE("rationals")
{
    const Rational q(-7, 3);
    const auto j = io::rational_to_json(q);
    CHECK(j["num"] == "-7");
    CHECK(j["den"] == "3");
    CHECK(io::rational_from_json(j) == q);
    CHECK(io::rational_from_json(io::Json("5/10")) == Q(1, 2));
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
    const Rational huge(big, 7);
    CHECK(io::rational_from_json(io::rational_to_json(huge)) == huge);
    CHECK_THROWS(io::rational_from_json(io::Json{{"num", "1"}}));
}

TEST_CASE("regime rows round trip through JSON")
{
    for (std::size_t trials : {0u, 200u}) {
        const auto rows = sample_rows(trials);
        const auto text = io::dump(io::regime_rows_to_json(rows));
        const auto back = io::regime_rows_from_json(io::Json::parse(text));
        CHECK(back == rows);
        CHECK(io::dump(io::regime_rows_to_json(back)) == text);
    }
}

TEST_CASE("CSV layout")
{
    CHECK(io::regime_rows_to_csv({}) == std::string(io::regime_csv_header) + "\n");
    const auto rows = sample_rows(100);
    const auto csv = io::regime_rows_to_csv(rows);
    const auto first_break = csv.find('\n');
    CHECK(csv.substr(0, first_break) == io::regime_csv_header);
    const auto line = csv.substr(first_break + 1, csv.find('\n', first_break + 1) - first_break - 1);
    // same number of columns as the header, and n first
    CHECK(std::count(line.begin(), line.end(), ',') ==
          std::count(io::regime_csv_header, io::regime_csv_header + std::strlen(io::regime_csv_header), ','));
    CHECK(line.rfind("40,39,30;10,", 0) == 0);
    CHECK(line.substr(line.rfind(',') + 1) == "anti_concentration");
}

TEST_CASE("identical inputs give identical bytes")
{
    CHECK(io::regime_rows_to_csv(sample_rows(300)) == io::regime_rows_to_csv(sample_rows(300)));
    CHECK(io::dump(io::regime_rows_to_json(sample_rows(300))) == io::dump(io::regime_rows_to_json(sample_rows(300))));
}

TEST_CASE("moments report")
{
    const auto st = stats(generators::path(4));
    const Composition c({2, 2});
    const auto rep = full_report<Rational>(st, c);
    const auto j = io::moments_to_json(st, c, rep);
    CHECK(io::rational_from_json(j["var_common"]) == Q(2, 3));
    CHECK(j["per_color"].size() == 2);
    const auto csv = io::moments_to_csv(st, c, rep);
    CHECK(csv.rfind(io::moments_csv_header, 0) == 0);
    CHECK(csv.find("\n4,3,2;2,10,1,2,") != std::string::npos);
}

TEST_CASE("I/O errors name the path")
{
    try {
        io::write_text_file("/nonexistent/dir/out.json", "x");
        FAIL("expected failure");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/dir/out.json") != std::string::npos);
    }
    const auto path = std::filesystem::temp_directory_path() / "randcolor_io_test.txt";
    io::write_text_file(path, "abc\n");
    CHECK(io::read_text_file(path) == "abc\n");
    std::filesystem::remove(path);
}

TEST_CASE("format_double")
{
    CHECK(io::format_double(0.5) == "0.5");
    CHECK(io::format_double(1.0 / 3) == "0.33333333333333331");
    CHECK(io::format_double(std::nan("")) == "nan");
}
