#include <catch2/catch_amalgamated.hpp>

#include "powser/corpus.hpp"
#include "powser/report.hpp"
#include "powser/series_io.hpp"

using namespace powser;

TEST_CASE("series JSON literal round trips") {
    const std::string text = R"({"order":3,"coeffs":["1","-1/2","1/6","0"]})";
    const series f = parse_series_json(text);
    CHECK(f.order() == 3);
    CHECK(f[1] == make_rational(-1, 2));
    CHECK(serialize_series_json(f) == text);
}

TEST_CASE("series JSON literal is validated strictly") {
    CHECK_THROWS_AS(parse_series_json("not json"), parse_error);
    CHECK_THROWS_AS(parse_series_json(R"({"coeffs":["1"]})"), parse_error);
    CHECK_THROWS_AS(parse_series_json(R"({"order":2,"coeffs":["1","2"]})"), parse_error);
    CHECK_THROWS_AS(parse_series_json(R"({"order":1,"coeffs":["1",2]})"), parse_error);
    CHECK_THROWS_AS(parse_series_json(R"({"order":-1,"coeffs":[]})"), parse_error);
    CHECK_THROWS_AS(parse_series_json(R"({"order":0,"coeffs":["1/0"]})"), parse_error);
}

TEST_CASE("rational list parsing") {
    const auto v = parse_rational_list("1,3,5");
    REQUIRE(v.size() == 3);
    CHECK(v[2] == 5);
    CHECK_THROWS_AS(parse_rational_list("1,,2"), parse_error);
    CHECK_THROWS_AS(parse_rational_list(""), parse_error);
}

TEST_CASE("identity report JSON rendering") {
    identity_report rep;
    rep.identity = "demo";
    rep.params = {{"n", 3}, {"k", -2}};
    rep.lhs = "1/2";
    rep.rhs = "1/2";
    rep.pass = true;
    CHECK(rep.to_json() ==
          R"({"identity":"demo","params":{"n":3,"k":-2},"lhs":"1/2","rhs":"1/2","pass":true})");
    rep.pass = false;
    rep.flag = "quote \" and backslash \\";
    CHECK(rep.to_json().find("\\\"") != std::string::npos);
    CHECK(rep.to_json().find("\\\\") != std::string::npos);
}

TEST_CASE("corpus generation is deterministic per seed") {
    const corpus_options opt{.seed = 7, .count = 20, .max_order = 12};
    const auto a = random_series_corpus(opt);
    const auto b = random_series_corpus(opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].order() == b[i].order());
        CHECK(a[i].coeffs() == b[i].coeffs());
        CHECK(a[i][0] != 0);
        CHECK(a[i].order() <= 12);
    }
    const auto c = random_series_corpus({.seed = 8, .count = 20, .max_order = 12});
    bool all_same = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        all_same = all_same && a[i].order() == c[i].order() && a[i].coeffs() == c[i].coeffs();
    CHECK_FALSE(all_same);
}
