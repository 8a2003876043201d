#include <doctest.h>

#include "fingeo/constructions.hpp"
#include "fingeo/incfile.hpp"

using namespace fingeo;

namespace {

IncidenceStructure sample() {
    return IncidenceStructure(5, {{0, 1, 2}, {0, 3, 4}, {1, 3}});
}

}  // namespace

TEST_CASE("write produces the documented layout") {
    std::string text = write_inc(sample());
    CHECK(text ==
          "incidence v1\n"
          "points 5\n"
          "blocks 3\n"
          "0 1 2\n"
          "0 3 4\n"
          "1 3\n");
}

TEST_CASE("round trip is the identity") {
    IncidenceStructure S = sample();
    IncFile f = parse_inc(write_inc(S));
    CHECK(f.structure == S);
    CHECK(f.metadata.empty());

    Field F(3);
    PG3 pg(F);
    IncidenceStructure W = build_wq(pg).structure();
    CHECK(parse_inc(write_inc(W)).structure == W);
}

TEST_CASE("metadata survives the round trip") {
    std::map<std::string, std::string> meta{{"kind", "wq"}, {"q", "3"}};
    std::string text = write_inc(sample(), meta);
    CHECK(text.find("# kind=wq\n") != std::string::npos);
    CHECK(text.find("# q=3\n") != std::string::npos);
    IncFile f = parse_inc(text);
    CHECK(f.metadata == meta);
    CHECK(f.structure == sample());
}

TEST_CASE("writing twice is byte-identical") {
    std::map<std::string, std::string> meta{{"b", "2"}, {"a", "1"}};
    CHECK(write_inc(sample(), meta) == write_inc(sample(), meta));
}

TEST_CASE("parse errors carry the offending line") {
    auto expect_error = [](const std::string& text, int line) {
        try {
            parse_inc(text);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error("incidence v2\npoints 1\nblocks 0\n", 1);
    expect_error("incidence v1\npoints x\nblocks 0\n", 2);
    expect_error("incidence v1\npoints 2\nblocks nope\n", 3);
    expect_error("incidence v1\npoints 2\nblocks 1\n", 3);          // missing block
    expect_error("incidence v1\npoints 2\nblocks 1\n0 1\n0\n", 5);  // extra line
    // metadata after the first block line is malformed
    expect_error("incidence v1\npoints 2\nblocks 2\n0\n# k=v\n", 5);
}

TEST_CASE("index violations raise IndexError") {
    CHECK_THROWS_AS(parse_inc("incidence v1\npoints 2\nblocks 1\n0 2\n"), IndexError);
    // out-of-order and repeated indices are format errors, not index errors
    CHECK_THROWS_AS(parse_inc("incidence v1\npoints 3\nblocks 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_inc("incidence v1\npoints 3\nblocks 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_inc("incidence v1\npoints 2\nblocks 1\n-1 0\n"), ParseError);
}

TEST_CASE("repeated blocks raise DuplicateBlock") {
    CHECK_THROWS_AS(parse_inc("incidence v1\npoints 3\nblocks 2\n0 1\n0 1\n"),
                    DuplicateBlock);
}

TEST_CASE("blocks must arrive in canonical order") {
    CHECK_THROWS_AS(parse_inc("incidence v1\npoints 4\nblocks 2\n2 3\n0 1\n"),
                    ParseError);
}

TEST_CASE("file write and read") {
    const std::string path = "/tmp/fingeo_test_roundtrip.inc";
    write_inc_file(path, sample(), {{"note", "test"}});
    IncFile f = read_inc_file(path);
    CHECK(f.structure == sample());
    CHECK(f.metadata.at("note") == "test");
    CHECK_THROWS(read_inc_file("/tmp/fingeo_no_such_file.inc"));
}
