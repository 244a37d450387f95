#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <string>

#include "hexmass/element_io.hpp"
#include "hexmass/mass.hpp"
#include "hexmass/meshgen.hpp"

using namespace hexmass;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("hexmass_io_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("round trip preserves all 32 numbers exactly") {
    TempDir dir;
    const std::string path = dir.file("roundtrip.json");
    SplitMix64 rng(2718);
    int tested = 0;
    for (int t = 0; t < 1000; ++t) {
        ElementRecord rec;
        rec.id = "elem-" + std::to_string(t);
        rec.geometry = gen_random_family({0.6, 1, rng.next_u64()})[0];
        for (int i = 0; i < 8; ++i) {
            rec.densities.rho[i] = 0.1 + 10.0 * rng.next_unit();
        }
        if (centroid_metric(rec.geometry) <= 0.0) continue;
        write_element(rec, path);
        const ElementRecord back = read_element(path);
        CHECK(back.id == rec.id);
        for (int i = 0; i < 8; ++i) {
            CHECK(back.densities.rho[i] == rec.densities.rho[i]);
            for (int k = 0; k < 3; ++k) {
                CHECK(back.geometry.nodes[i][k] == rec.geometry.nodes[i][k]);
            }
        }
        ++tested;
    }
    CHECK(tested > 900);
}

TEST_CASE("multi-element files round trip") {
    TempDir dir;
    const std::string path = dir.file("multi.json");
    std::vector<ElementRecord> recs;
    int index = 0;
    for (const auto& g : gen_random_family({0.4, 5, 31})) {
        recs.push_back({g, default_densities(), "e" + std::to_string(index++)});
    }
    write_elements(recs, path);
    const auto back = read_elements(path);
    REQUIRE(back.size() == 5);
    for (std::size_t e = 0; e < 5; ++e) {
        CHECK(back[e].id == recs[e].id);
        for (int i = 0; i < 8; ++i) {
            for (int k = 0; k < 3; ++k) {
                CHECK(back[e].geometry.nodes[i][k] == recs[e].geometry.nodes[i][k]);
            }
        }
    }
    // read_element only accepts single-element content.
    CHECK_THROWS_AS(read_element(path), StructuralError);
}

TEST_CASE("densities default to the standard configuration when omitted") {
    TempDir dir;
    const std::string path = dir.file("nodens.json");
    write_text(path, R"({"id":"cube","nodes":[[-1,-1,-1],[1,-1,-1],[1,1,-1],[-1,1,-1],
                         [-1,-1,1],[1,-1,1],[1,1,1],[-1,1,1]]})");
    const ElementRecord rec = read_element(path);
    const NodalDensities want = default_densities();
    for (int i = 0; i < 8; ++i) {
        CHECK(rec.densities.rho[i] == want.rho[i]);
    }
}

TEST_CASE("malformed JSON raises a parse error") {
    TempDir dir;
    const std::string path = dir.file("bad.json");
    write_text(path, "{\"id\": \"x\", \"nodes\": [[1,2,3]");
    CHECK_THROWS_AS(read_element(path), ParseError);
    CHECK_THROWS_AS(read_element(dir.file("missing.json")), ParseError);
}

TEST_CASE("wrong node count raises a structural error") {
    TempDir dir;
    const std::string path = dir.file("short.json");
    write_text(path, R"({"id":"short","nodes":[[-1,-1,-1],[1,-1,-1],[1,1,-1],[-1,1,-1],
                         [-1,-1,1],[1,-1,1],[1,1,1]]})");
    CHECK_THROWS_AS(read_element(path), StructuralError);

    write_text(path, R"({"id":"nonode"})");
    CHECK_THROWS_AS(read_element(path), StructuralError);

    write_text(path, R"({"id":"badnode","nodes":[[-1,-1],[1,-1,-1],[1,1,-1],[-1,1,-1],
                         [-1,-1,1],[1,-1,1],[1,1,1],[-1,1,1]]})");
    CHECK_THROWS_AS(read_element(path), StructuralError);
}

TEST_CASE("inverted element raises a validity error") {
    TempDir dir;
    const std::string path = dir.file("inverted.json");
    // Reference cube mirrored in x (centroid metric -1).
    write_text(path, R"({"id":"inv","nodes":[[1,-1,-1],[-1,-1,-1],[-1,1,-1],[1,1,-1],
                         [1,-1,1],[-1,-1,1],[-1,1,1],[1,1,1]]})");
    CHECK_THROWS_AS(read_element(path), ValidityError);
}

TEST_CASE("non-positive densities raise a validity error") {
    TempDir dir;
    const std::string path = dir.file("badrho.json");
    write_text(path, R"({"id":"rho","nodes":[[-1,-1,-1],[1,-1,-1],[1,1,-1],[-1,1,-1],
                         [-1,-1,1],[1,-1,1],[1,1,1],[-1,1,1]],
                         "densities":[1,1,1,0,2,2,2,2]})");
    CHECK_THROWS_AS(read_element(path), ValidityError);
}
