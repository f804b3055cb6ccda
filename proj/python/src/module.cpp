#include "spiky/bounds.hpp"
#include "spiky/cli.hpp"
#include "spiky/error.hpp"
#include "spiky/illumination.hpp"
#include "spiky/lowerbound.hpp"
#include "spiky/piercing.hpp"
#include "spiky/sphere_cover.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace spiky;

namespace {

using Rows = std::vector<std::vector<double>>;

Rows rows(const std::vector<UnitVector>& v)
{
    Rows out;
    for (const auto& u : v) out.push_back(u.vec().raw());
    return out;
}

Rows rows(const std::vector<Vector>& v)
{
    Rows out;
    for (const auto& u : v) out.push_back(u.raw());
    return out;
}

std::vector<UnitVector> unit_rows(const Rows& r, double tol = 1e-9)
{
    std::vector<UnitVector> out;
    for (const auto& x : r) out.emplace_back(Vector(x), tol);
    return out;
}

int dim_of(const Rows& r)
{
    if (r.empty()) throw DomainError("empty input");
    return static_cast<int>(r.front().size());
}

BallFamily family(const std::vector<std::pair<std::vector<double>, double>>& balls)
{
    std::vector<Ball> b;
    for (const auto& [c, r] : balls) b.emplace_back(Vector(c), r);
    if (b.empty()) throw DomainError("empty ball family");
    const int n = b.front().dim();
    return BallFamily(n, std::move(b));
}

py::dict cover_dict(const CoverCertificate& c)
{
    py::dict d;
    d["passed"] = c.passed;
    d["margin"] = c.margin;
    d["resolution"] = c.resolution;
    d["samples"] = c.samples;
    if (c.witness) d["witness"] = c.witness->vec().raw();
    return d;
}

} // namespace

PYBIND11_MODULE(_spiky, m)
{
    m.doc() = "Piercing, illumination and spherical covering constructions";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
    py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("kl_exponent", &bounds::kl_exponent, py::arg("theta"));
    m.def("covering_exponent", &bounds::covering_exponent, py::arg("theta"));
    m.def("solve_alpha", &bounds::solve_alpha, py::arg("tol") = 1e-12);
    m.def("exponent_report", [] {
        const auto r = bounds::exponent_report();
        py::dict d;
        d["alpha_star"] = r.alpha_star;
        d["bound_base"] = r.bound_base;
        d["gallai_upper"] = r.gallai_upper;
        d["gallai_lower"] = r.gallai_lower;
        return d;
    });

    m.def(
        "greedy_cover", [](int n, double theta, std::uint64_t seed) { return rows(greedy_cover(n, theta, seed).centers); },
        py::arg("n"), py::arg("theta"), py::arg("seed") = 0);
    m.def(
        "maximal_packing",
        [](int n, double theta, std::uint64_t seed) { return rows(maximal_packing(n, theta, seed).centers); },
        py::arg("n"), py::arg("theta"), py::arg("seed") = 0);
    m.def(
        "verify_cover",
        [](const Rows& centers, double theta, const std::string& method, double value, std::uint64_t seed) {
            const Cover c{dim_of(centers), theta, unit_rows(centers)};
            if (method != "net" && method != "sampled") throw DomainError("method must be 'net' or 'sampled'");
            return cover_dict(verify_cover(
                c, method == "net" ? CertificateMethod::net : CertificateMethod::sampled, value, seed));
        },
        py::arg("centers"), py::arg("theta"), py::arg("method") = "net", py::arg("value"), py::arg("seed") = 0);

    m.def(
        "pierce",
        [](const std::vector<std::pair<std::vector<double>, double>>& balls, std::uint64_t seed) {
            PiercingConfig cfg;
            cfg.seed = seed;
            const auto set = pierce(family(balls), cfg);
            py::dict d;
            d["points"] = rows(set.points);
            d["sources"] = set.sources;
            d["verified"] = set.verified;
            d["sphere_layer"] = set.accounting.sphere_layer;
            d["t"] = set.accounting.t;
            return d;
        },
        py::arg("balls"), py::arg("seed") = 0);
    m.def(
        "verify_piercing",
        [](const std::vector<std::pair<std::vector<double>, double>>& balls, const Rows& points) {
            std::vector<Vector> p;
            for (const auto& x : points) p.emplace_back(x);
            const auto r = verify_piercing(family(balls), p);
            return py::make_tuple(r.ok, r.unpierced ? py::cast(*r.unpierced) : py::none());
        },
        py::arg("balls"), py::arg("points"));

    m.def(
        "is_cap_body",
        [](const Rows& vertices) {
            std::vector<Vector> v;
            for (const auto& x : vertices) v.emplace_back(x);
            const auto r = is_cap_body(SpikyBall(dim_of(vertices), v));
            return py::make_tuple(r.ok, r.violating ? py::cast(*r.violating) : py::none());
        },
        py::arg("vertices"));
    m.def(
        "positive_hull_full", [](const Rows& dirs) { return positive_hull_full(unit_rows(dirs)); }, py::arg("directions"));
    m.def(
        "illuminate",
        [](const Rows& vertices, std::optional<double> alpha, std::uint64_t seed) {
            std::vector<Vector> v;
            for (const auto& x : vertices) v.emplace_back(x);
            const CapBody k(SpikyBall(dim_of(vertices), v));
            const double a = alpha.value_or(bounds::solve_alpha());
            const auto r = illuminate_cap_body(k, a, seed);
            py::dict d;
            d["directions"] = rows(r.directions.directions);
            d["alpha"] = r.alpha;
            d["u1"] = r.far_vertices;
            d["u2"] = r.cover_size;
            d["verified"] = r.check.ok;
            return d;
        },
        py::arg("vertices"), py::arg("alpha") = py::none(), py::arg("seed") = 0);

    m.def(
        "lower_bound",
        [](int n, std::size_t target, std::size_t samples, std::uint64_t seed) {
            const auto x = construct_separated_set(n, target, seed);
            const auto y = symmetrize(x);
            const auto body = build_lower_bound_body(y);
            const auto rep = multiplicity_report(y, samples, seed);
            py::dict d;
            d["reached_target"] = x.reached_target;
            d["points"] = rows(y.points);
            d["vertices"] = rows(body.vertices());
            d["max_multiplicity"] = rep.max;
            d["mean_multiplicity"] = rep.mean;
            d["histogram"] = rep.histogram;
            d["witness"] = rep.witness ? py::cast(*rep.witness) : py::none();
            return d;
        },
        py::arg("n"), py::arg("target"), py::arg("samples") = 10000, py::arg("seed") = 0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
