#include "spiky/io.hpp"

#include "spiky/error.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace spiky::io {

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double number(const json& j, const char* what)
{
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
    return v;
}

int dimension_of(const json& j)
{
    const auto& d = field(j, "dimension");
    if (!d.is_number_integer()) throw ParseError("dimension must be an integer");
    const auto n = d.get<long long>();
    if (n < 2 || n > 10000) throw ParseError("dimension must lie in [2, 10000]");
    return static_cast<int>(n);
}

Vector coords(const json& j, int n, const char* what)
{
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    if (j.size() != static_cast<std::size_t>(n))
        throw ParseError(std::string(what) + " has " + std::to_string(j.size()) + " coordinates, expected " +
                         std::to_string(n));
    std::vector<double> c;
    c.reserve(j.size());
    for (const auto& x : j) c.push_back(number(x, what));
    return Vector(std::move(c));
}

const json& array_field(const json& j, const char* key)
{
    const auto& a = field(j, key);
    if (!a.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
    return a;
}

BallFamily parse_ball_family(const json& j)
{
    const int n = dimension_of(j);
    std::vector<Ball> balls;
    for (const auto& b : array_field(j, "balls")) {
        const double r = number(field(b, "radius"), "radius");
        if (!(r > 0.0)) throw ParseError("ball radius must be positive");
        balls.emplace_back(coords(field(b, "center"), n, "center"), r);
    }
    if (balls.empty()) throw ParseError("ball family is empty");
    return BallFamily(n, std::move(balls));
}

SpikyBall parse_spiky_body(const json& j)
{
    const int n = dimension_of(j);
    std::vector<Vector> vertices;
    for (const auto& v : array_field(j, "vertices")) {
        auto x = coords(v, n, "vertex");
        if (!(x.norm() > 1.0)) throw ParseError("vertex " + std::to_string(vertices.size()) + " has norm <= 1");
        vertices.push_back(std::move(x));
    }
    try {
        return SpikyBall(n, std::move(vertices));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

DirectionSetFile parse_direction_set(const json& j)
{
    DirectionSetFile d{dimension_of(j), {}, {}, std::nullopt, std::nullopt};
    for (const auto& v : array_field(j, "directions")) {
        auto x = coords(v, d.dimension, "direction");
        if (std::abs(x.norm() - 1.0) > kParseUnitTol)
            throw ParseError("direction " + std::to_string(d.directions.size()) + " is not a unit vector");
        d.directions.emplace_back(std::move(x), kParseUnitTol);
    }
    if (j.contains("provenance")) {
        for (const auto& t : array_field(j, "provenance")) {
            if (!t.is_string()) throw ParseError("provenance tags must be strings");
            d.provenance.push_back(t.get<std::string>());
        }
        if (d.provenance.size() != d.directions.size()) throw ParseError("provenance length mismatch");
    }
    if (j.contains("angular_radius")) d.angular_radius = number(j.at("angular_radius"), "angular_radius");
    if (j.contains("separation")) d.separation = number(j.at("separation"), "separation");
    return d;
}

PointSetFile parse_point_set(const json& j)
{
    PointSetFile p{dimension_of(j), {}, {}};
    for (const auto& v : array_field(j, "points")) p.points.push_back(coords(v, p.dimension, "point"));
    if (j.contains("provenance")) {
        for (const auto& t : array_field(j, "provenance")) {
            if (!t.is_number_integer()) throw ParseError("point provenance tags must be integers");
            p.provenance.push_back(t.get<int>());
        }
        if (p.provenance.size() != p.points.size()) throw ParseError("provenance length mismatch");
    }
    return p;
}

json array_of(const Vector& v)
{
    json a = json::array();
    for (double x : v.coords()) a.push_back(x);
    return a;
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool is_flat(const json& j)
{
    for (const auto& x : j)
        if (x.is_structured()) return false;
    return true;
}

void write(std::ostringstream& os, const json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            if (!first) os << ",\n";
            first = false;
            os << inner << json(k).dump() << ": ";
            write(os, v, indent + 1);
        }
        os << "\n" << pad << "}";
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            os << "[]";
            return;
        }
        if (is_flat(j)) {
            os << "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ", ";
                write(os, j[i], indent + 1);
            }
            os << "]";
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ",\n";
            os << inner;
            write(os, j[i], indent + 1);
        }
        os << "\n" << pad << "]";
        return;
    }
    case json::value_t::number_float: {
        const double v = j.get<double>();
        os << (std::isfinite(v) ? format_double(v) : "null");
        return;
    }
    default:
        os << j.dump();
    }
}

} // namespace

Artifact parse_artifact(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    const auto& kind = field(j, "kind");
    if (!kind.is_string()) throw ParseError("kind must be a string");
    const auto k = kind.get<std::string>();
    try {
        if (k == "ball_family") return parse_ball_family(j);
        if (k == "spiky_body") return parse_spiky_body(j);
        if (k == "direction_set") return parse_direction_set(j);
        if (k == "point_set") return parse_point_set(j);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    } catch (const DimensionMismatch& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown artifact kind \"" + k + "\"");
}

Artifact read_artifact(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_artifact(ss.str());
}

json to_json(const BallFamily& f)
{
    json j;
    j["kind"] = "ball_family";
    j["dimension"] = f.dimension;
    j["balls"] = json::array();
    for (const auto& b : f.balls) {
        json e;
        e["center"] = array_of(b.center);
        e["radius"] = b.radius;
        j["balls"].push_back(std::move(e));
    }
    return j;
}

json to_json(const SpikyBall& s)
{
    json j;
    j["kind"] = "spiky_body";
    j["dimension"] = s.dimension;
    j["vertices"] = json::array();
    for (const auto& v : s.vertices) j["vertices"].push_back(array_of(v));
    return j;
}

json to_json(const DirectionSetFile& d)
{
    json j;
    j["kind"] = "direction_set";
    j["dimension"] = d.dimension;
    if (d.angular_radius) j["angular_radius"] = *d.angular_radius;
    if (d.separation) j["separation"] = *d.separation;
    j["directions"] = json::array();
    for (const auto& u : d.directions) j["directions"].push_back(array_of(u.vec()));
    if (!d.provenance.empty()) j["provenance"] = d.provenance;
    return j;
}

json to_json(const PointSetFile& p)
{
    json j;
    j["kind"] = "point_set";
    j["dimension"] = p.dimension;
    j["points"] = json::array();
    for (const auto& v : p.points) j["points"].push_back(array_of(v));
    if (!p.provenance.empty()) j["provenance"] = p.provenance;
    return j;
}

json to_json(const Artifact& a)
{
    return std::visit([](const auto& x) { return to_json(x); }, a);
}

std::string dump(const json& j)
{
    std::ostringstream os;
    write(os, j, 0);
    os << "\n";
    return os.str();
}

std::string serialize(const Artifact& a)
{
    return dump(to_json(a));
}

void write_atomic(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot rename onto " + path + ": " + ec.message());
    }
}

std::string tag(const DirectionSource& s)
{
    switch (s.kind) {
    case DirectionSource::Kind::vertex: return "vertex:" + std::to_string(s.index);
    case DirectionSource::Kind::cover: return "cover:" + std::to_string(s.index);
    case DirectionSource::Kind::given: break;
    }
    return "given:" + std::to_string(s.index);
}

DirectionSetFile to_file(const DirectionSet& d)
{
    DirectionSetFile f{d.dimension, d.directions, {}, std::nullopt, std::nullopt};
    for (const auto& s : d.sources) f.provenance.push_back(tag(s));
    return f;
}

} // namespace spiky::io
