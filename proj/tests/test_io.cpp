#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "urd/io.hpp"

using namespace urd;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = (std::filesystem::temp_directory_path() / name).string();
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("JSON round trip is the identity") {
    const ConstructResult res = construct_urd(3, 8);
    REQUIRE(res.ok());
    const std::string text = serialize(*res.decomposition);
    const Decomposition back = parse_decomposition(text);
    CHECK(back == *res.decomposition);
    CHECK(serialize(back) == text); // byte-identical re-serialization
}

TEST_CASE("document keys appear in the canonical order") {
    const ConstructResult res = construct_urd(3, 8);
    const std::string text = serialize(*res.decomposition);
    const auto pos = [&](const std::string& key) { return text.find("\"" + key + "\""); };
    CHECK(pos("formatVersion") < pos("v"));
    CHECK(pos("v") < pos("n"));
    CHECK(pos("n") < pos("s"));
    CHECK(pos("s") < pos("oneFactor"));
    CHECK(pos("oneFactor") < pos("starClasses"));
}

TEST_CASE("DOT export has one subgraph per class") {
    const ConstructResult res = construct_urd(3, 20);
    const std::string dot = to_dot(*res.decomposition);
    size_t count = 0;
    for (size_t at = dot.find("subgraph"); at != std::string::npos;
         at = dot.find("subgraph", at + 1))
        ++count;
    CHECK(count == res.decomposition->star_classes.size() + 1);
    CHECK(dot.find("graph urd {") == 0);
}

TEST_CASE("edge list covers every edge exactly once") {
    const ConstructResult res = construct_urd(3, 20);
    const std::string edges = to_edge_list(*res.decomposition);
    size_t lines = 0;
    for (char c : edges)
        if (c == '\n') ++lines;
    CHECK(lines == 20 * 19 / 2);
    CHECK(edges.find(" 0\n") != std::string::npos); // the matching class id
}

TEST_CASE("malformed documents raise parse errors") {
    CHECK_THROWS_AS(parse_decomposition("{\"formatVersion\": 1"), ParseError);
    CHECK_THROWS_AS(parse_decomposition("{}"), ParseError);
    CHECK_THROWS_AS(parse_decomposition("{\"formatVersion\": 2, \"v\": 8, \"n\": 3, \"s\": 0, "
                                        "\"oneFactor\": [], \"starClasses\": []}"),
                    ParseError);
    // s disagreeing with the class list is a structural error.
    const ConstructResult res = construct_urd(3, 8);
    ordered_json doc = to_json(*res.decomposition);
    doc["s"] = 7;
    CHECK_THROWS_AS(decomposition_from_json(doc), ParseError);
}

TEST_CASE("loading re-verifies unless skipped") {
    const ConstructResult res = construct_urd(3, 8);
    TempFile file("urd_io_test.json");
    ordered_json doc = to_json(*res.decomposition);
    // Tamper: change one leaf so an edge is double covered.
    doc["starClasses"][0][0]["leaves"][0] = 2;
    write_text_file(file.path, doc.dump(2));
    CHECK_THROWS_AS(load_decomposition(file.path), VerifyError);
    CHECK_NOTHROW(load_decomposition(file.path, /*verify=*/false));
}

TEST_CASE("file I/O errors surface as exceptions") {
    CHECK_THROWS(read_text_file("/nonexistent/path/urd.json"));
    CHECK_THROWS(write_text_file("/nonexistent/dir/urd.json", "x"));
}
