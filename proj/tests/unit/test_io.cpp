#include "spiky/error.hpp"
#include "spiky/io.hpp"
#include "spiky/random.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

using namespace spiky;

namespace {

std::string fixture(const std::string& name)
{
    return std::string(SPIKY_FIXTURES) + "/" + name;
}

template <class T>
void round_trip(const T& value)
{
    const io::Artifact a = value;
    const std::string text = io::serialize(a);
    const auto back = io::parse_artifact(text);
    REQUIRE(std::holds_alternative<T>(back));
    CHECK(std::get<T>(back) == value);
    CHECK(io::serialize(back) == text);
}

} // namespace

TEST_CASE("fixtures parse")
{
    const auto f = std::get<BallFamily>(io::read_artifact(fixture("two_balls.json")));
    CHECK(f.dimension == 2);
    CHECK(f.balls.size() == 2);
    CHECK(f.balls[1].radius == 5.0);
    const auto s = std::get<SpikyBall>(io::read_artifact(fixture("octahedron.json")));
    CHECK(s.vertices.size() == 6);
}

TEST_CASE("malformed files are parse errors")
{
    for (const char* name : {"bad_dimension.json", "bad_radius.json", "inner_vertex.json", "not_unit.json",
                             "unknown_kind.json", "truncated.json", "missing.json"})
        CHECK_THROWS_AS(io::read_artifact(fixture(name)), ParseError);
    CHECK_THROWS_AS(io::parse_artifact("[]"), ParseError);
    CHECK_THROWS_AS(io::parse_artifact(R"({"kind": "point_set", "dimension": 2.5, "points": []})"), ParseError);
    CHECK_THROWS_AS(io::parse_artifact(R"({"kind": "point_set", "dimension": 2, "points": [["a", 1]]})"), ParseError);
    CHECK_THROWS_AS(io::parse_artifact(R"({"kind": "ball_family", "dimension": 2, "balls": []})"), ParseError);
    CHECK_THROWS_AS(
        io::parse_artifact(R"({"kind": "point_set", "dimension": 2, "points": [[0, 0]], "provenance": [1, 2]})"),
        ParseError);
}

TEST_CASE("round trip preserves every bit")
{
    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.index(5));
        std::vector<Ball> balls;
        std::vector<Vector> verts;
        std::vector<Vector> pts;
        std::vector<int> prov;
        io::DirectionSetFile d{n, {}, {}, std::nullopt, std::nullopt};
        for (int i = 0; i < 8; ++i) {
            balls.emplace_back(Vector(rng.in_unit_ball(n)) * 1e3, std::ldexp(rng.uniform() + 0.01, -20 + trial));
            verts.push_back(Vector(rng.unit_vector(n)) * (1.0 + rng.uniform() + 1e-6));
            pts.push_back(Vector(rng.in_unit_ball(n)) * 1e-7);
            prov.push_back(static_cast<int>(rng.index(5)) - 1);
            d.directions.emplace_back(Vector(rng.unit_vector(n)));
            d.provenance.push_back("cover:" + std::to_string(i));
        }
        if (trial % 2) d.angular_radius = rng.uniform();
        else d.separation = rng.uniform();
        round_trip(BallFamily(n, balls));
        round_trip(SpikyBall(n, verts));
        round_trip(io::PointSetFile{n, pts, prov});
        round_trip(d);
    }
    round_trip(io::PointSetFile{2, {}, {}});
}

TEST_CASE("numbers use 17 significant digits")
{
    io::json j;
    j["x"] = 0.1;
    j["n"] = 3;
    j["s"] = "a\"b";
    const auto text = io::dump(j);
    CHECK(text.find("0.10000000000000001") != std::string::npos);
    CHECK(text.find("\"n\": 3") != std::string::npos);
    CHECK(text.find(R"("a\"b")") != std::string::npos);
}

TEST_CASE("atomic write replaces the file")
{
    const auto dir = std::filesystem::temp_directory_path() / "spiky_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "out.json").string();
    io::write_atomic(path, "first");
    io::write_atomic(path, "second");
    std::ifstream in(path);
    std::string s;
    std::getline(in, s);
    CHECK(s == "second");
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++files;
    CHECK(files == 1);
    std::filesystem::remove_all(dir);
}
