#include <doctest.h>

#include "advgap/dataset.hpp"
#include "advgap/errors.hpp"

using namespace advgap;

namespace {

const char* kPentagonish = R"({
  "epsilon": "1/2",
  "norm": "2",
  "points": [[0, 0], [1, 0], [2, 1], [1, 2], [0, 1]],
  "labels": [1, 2, 3, 4, 5],
  "weights": ["1/5", "1/5", "1/5", "1/5", "1/5"]
})";

}  // namespace

TEST_SUITE("dataset") {

TEST_CASE("norm spec") {
    CHECK(NormSpec::from_wire("inf").is_infinity());
    CHECK(NormSpec::from_wire("2").is_integer_p());
    CHECK(NormSpec::from_wire("2").p_integer() == 2);
    CHECK_FALSE(NormSpec::from_wire("5/2").is_integer_p());
    CHECK(NormSpec::from_wire("5/2").p() == Rational(5, 2));
    CHECK_THROWS_AS(NormSpec::from_wire("1"), ParseError);     // p = 1 rejected
    CHECK_THROWS_AS(NormSpec::from_wire("1/2"), ParseError);   // p < 1 rejected
    CHECK(NormSpec::from_wire("inf").to_wire() == "inf");
    CHECK(NormSpec::from_wire("3").to_wire() == "3");
}

TEST_CASE("five point dataset parses with uniform fifths") {
    const Dataset ds = parse_dataset(kPentagonish);
    CHECK(ds.dist.size() == 5);
    CHECK(ds.dist.num_classes() == 5);
    CHECK(ds.dist.weight(0) == Rational(1, 5));
    CHECK(ds.epsilon == Rational(1, 2));
    CHECK(ds.norm.is_integer_p());
}

TEST_CASE("weights default to uniform") {
    const Dataset ds = parse_dataset(R"({
      "epsilon": "1", "norm": "inf",
      "points": [[0], [1], [2]], "labels": [1, 2, 3]})");
    CHECK(ds.dist.weight(2) == Rational(1, 3));
}

TEST_CASE("decimal coordinates parse exactly") {
    const Dataset ds = parse_dataset(R"({
      "epsilon": 0.49, "norm": "inf",
      "points": [[0.1, 0.9], [1, 0]], "labels": [1, 2]})");
    CHECK(ds.epsilon == Rational(49, 100));
    CHECK(ds.dist.point(0).coords[0] == Rational(1, 10));
    CHECK(ds.dist.point(0).coords[1] == Rational(9, 10));
}

TEST_CASE("empty support is rejected") {
    CHECK_THROWS_WITH_AS(
        parse_dataset(R"({"epsilon":"1","norm":"2","points":[],"labels":[]})"),
        "empty support", ParseError);
}

TEST_CASE("weight simplex violation names the bad sum") {
    try {
        parse_dataset(R"({
          "epsilon": "1", "norm": "2",
          "points": [[0], [1]], "labels": [1, 2],
          "weights": ["1/2", "1/3"]})");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("5/6") != std::string::npos);
    }
}

TEST_CASE("normalize flag rescales exactly") {
    ParseOptions opts;
    opts.normalize = true;
    const Dataset ds = parse_dataset(R"({
      "epsilon": "1", "norm": "2",
      "points": [[0], [1]], "labels": [1, 2],
      "weights": ["1/2", "1/3"]})",
                                     opts);
    CHECK(ds.dist.weight(0) == Rational(3, 5));
    CHECK(ds.dist.weight(1) == Rational(2, 5));
}

TEST_CASE("duplicates are rejected unless merged") {
    const char* doc = R"({
      "epsilon": "1", "norm": "2",
      "points": [[0], [0], [1]], "labels": [1, 1, 2],
      "weights": ["1/4", "1/4", "1/2"]})";
    CHECK_THROWS_AS(parse_dataset(doc), ParseError);
    ParseOptions opts;
    opts.merge_duplicates = true;
    const Dataset ds = parse_dataset(doc, opts);
    CHECK(ds.dist.size() == 2);
    CHECK(ds.dist.weight(0) == Rational(1, 2));
}

TEST_CASE("label out of declared range") {
    CHECK_THROWS_AS(parse_dataset(R"({
      "epsilon": "1", "norm": "2", "num_classes": 1,
      "points": [[0], [1]], "labels": [1, 2]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_dataset(R"({
      "epsilon": "1", "norm": "2",
      "points": [[0], [1]], "labels": [0, 1]})"),
                    ParseError);
}

TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(parse_dataset(R"({
      "epsilon": "1", "norm": "2",
      "points": [[0, 1], [1]], "labels": [1, 2]})"),
                    ParseError);
}

TEST_CASE("serialize then parse is the identity") {
    const Dataset ds = parse_dataset(kPentagonish);
    const Dataset again = parse_dataset(serialize_dataset(ds));
    CHECK(again.dist == ds.dist);
    CHECK(again.epsilon == ds.epsilon);
    CHECK(again.norm == ds.norm);
    // rationals stay rational strings on the wire
    CHECK(serialize_dataset(ds).find("\"1/5\"") != std::string::npos);
}

TEST_CASE("malformed JSON fails cleanly") {
    CHECK_THROWS_AS(parse_dataset("{not json"), ParseError);
    CHECK_THROWS_AS(parse_dataset(""), ParseError);
    CHECK_THROWS_AS(parse_dataset(R"({"norm":"2"})"), ParseError);
}

}  // TEST_SUITE
