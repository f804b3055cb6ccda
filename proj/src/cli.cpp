#include "spiky/cli.hpp"

#include "spiky/bounds.hpp"
#include "spiky/error.hpp"
#include "spiky/illumination.hpp"
#include "spiky/io.hpp"
#include "spiky/lowerbound.hpp"
#include "spiky/piercing.hpp"
#include "spiky/random.hpp"
#include "spiky/sphere_cover.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>

namespace spiky::cli {

namespace {

using io::json;

struct Common {
    std::uint64_t seed = 0;
    double tol = kDefaultTol;
    std::string output;
    bool skip_verify = false;
};

struct Outcome {
    int code = kOk;
    json report;
};

json vec_json(const Vector& v)
{
    json a = json::array();
    for (double x : v.coords()) a.push_back(x);
    return a;
}

json pair_json(std::size_t i, std::size_t j)
{
    return json::array({i, j});
}

void emit(const Common& c, const io::Artifact& a)
{
    if (!c.output.empty()) io::write_atomic(c.output, io::serialize(a));
}

// Downgrades a failed verification to a warning under --skip-verify.
int verdict(bool ok, const Common& c, std::ostream& err, const std::string& what)
{
    if (ok) return kOk;
    if (c.skip_verify) {
        err << "warning: " << what << " (ignored by --skip-verify)\n";
        return kOk;
    }
    err << "error: " << what << "\n";
    return kVerification;
}

template <class T>
T expect(io::Artifact a, const char* kind)
{
    if (auto* p = std::get_if<T>(&a)) return std::move(*p);
    throw ParseError(std::string("expected a ") + kind + " artifact");
}

json certificate_json(const CoverCertificate& cert)
{
    json j;
    j["method"] = cert.method == CertificateMethod::net ? "net" : "sampled";
    j["passed"] = cert.passed;
    j["margin"] = cert.margin;
    j["resolution"] = cert.resolution;
    j["samples"] = cert.samples;
    if (cert.method == CertificateMethod::sampled) j["confidence_bound"] = cert.confidence_bound;
    if (cert.witness) j["witness"] = vec_json(cert.witness->vec());
    return j;
}

CoverCertificate certify(const Cover& cover, const std::string& method, std::size_t samples, const Common& c)
{
    if (method == "sampled")
        return verify_cover(cover, CertificateMethod::sampled, static_cast<double>(samples), c.seed, c.tol);
    if (method != "net") throw DomainError("unknown certificate method \"" + method + "\"");
    return verify_cover(cover, CertificateMethod::net, cover.angular_radius / 5.0, c.seed, c.tol);
}

std::optional<std::pair<std::size_t, std::size_t>> separation_violation(const std::vector<UnitVector>& pts,
                                                                        double theta, double tol)
{
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (angular_distance(pts[i], pts[j]) < theta - tol) return std::make_pair(i, j);
    return std::nullopt;
}

Outcome cmd_pierce(const std::string& input, const Common& c, std::optional<double> lambda,
                   std::optional<double> threshold, std::ostream& err)
{
    Outcome o;
    o.report["command"] = "pierce";
    const auto family = expect<BallFamily>(io::read_artifact(input), "ball_family");
    if (const auto pair = find_disjoint_pair(family, c.tol)) {
        o.report["status"] = "precondition_failed";
        o.report["error"] = "family is not pairwise intersecting";
        o.report["pair"] = pair_json(pair->first, pair->second);
        o.code = kPrecondition;
        return o;
    }
    PiercingConfig cfg;
    cfg.lambda = lambda;
    cfg.large_threshold = threshold;
    cfg.seed = c.seed;
    cfg.tol = c.tol;
    cfg.strict = false;
    const auto set = pierce(family, cfg);
    emit(c, io::PointSetFile{set.dimension, set.points, set.sources});

    const auto& acc = set.accounting;
    json a;
    a["lambda"] = acc.lambda;
    a["t"] = acc.t;
    a["large_threshold"] = acc.large_threshold;
    a["cap_radius"] = acc.cap_radius;
    a["large_balls"] = acc.large_balls;
    a["sphere_layer"] = acc.sphere_layer;
    a["scales"] = json::array();
    std::size_t refined = 0;
    for (const auto& s : acc.scales) {
        json e;
        e["k"] = s.k;
        e["lower"] = s.lower;
        e["upper"] = s.upper;
        e["balls"] = s.balls;
        e["cover_count"] = s.cover_count;
        e["points"] = s.points;
        a["scales"].push_back(std::move(e));
        refined += 2 * static_cast<std::size_t>(set.dimension) * s.cover_count;
    }
    a["total"] = acc.total;
    a["accounted"] = acc.total == 1 && acc.scales.empty() && acc.sphere_layer == 0 ? 1 : acc.sphere_layer + refined;
    o.report["status"] = set.verified ? "ok" : "verification_failed";
    o.report["verified"] = set.verified;
    if (set.unpierced) o.report["witness"] = *set.unpierced;
    o.report["points"] = set.points.size();
    o.report["accounting"] = std::move(a);
    o.code = verdict(set.verified, c, err, "piercing set misses a ball");
    return o;
}

Outcome cmd_illuminate(const std::string& input, const Common& c, std::optional<double> alpha_opt, bool raw,
                       std::ostream& err)
{
    Outcome o;
    o.report["command"] = "illuminate";
    auto body = expect<SpikyBall>(io::read_artifact(input), "spiky_body");
    if (!raw) {
        const auto check = is_cap_body(body, c.tol);
        if (!check.ok) {
            o.report["status"] = "precondition_failed";
            o.report["error"] = "not a cap body";
            o.report["pair"] = pair_json(check.violating->first, check.violating->second);
            o.code = kPrecondition;
            return o;
        }
    }
    const double alpha = alpha_opt.value_or(bounds::solve_alpha());
    IlluminationParams params;
    params.tol = c.tol;
    params.strict = false;
    const Cover u2 = illumination_cover(body.dimension, alpha, c.seed, params);
    const auto res = illuminate_spiky_ball(body, alpha, u2, params);
    emit(c, io::to_file(res.directions));

    o.report["status"] = res.check.ok ? "ok" : "verification_failed";
    o.report["verified"] = res.check.ok;
    o.report["alpha"] = alpha;
    o.report["u1"] = res.far_vertices;
    o.report["u2"] = res.cover_size;
    o.report["directions"] = res.directions.directions.size();
    o.report["positive_hull"] = res.check.positive_hull;
    if (res.check.unilluminated) o.report["witness"] = *res.check.unilluminated;
    o.report["u1_separated"] = u1_separation_check(body, alpha, c.tol);
    o.code = verdict(res.check.ok, c, err, "direction set does not illuminate the body");
    return o;
}

Outcome cmd_bounds()
{
    Outcome o;
    const auto r = bounds::exponent_report();
    o.report["command"] = "bounds";
    o.report["status"] = "ok";
    o.report["alpha_star"] = r.alpha_star;
    o.report["two_alpha_degrees"] = 2.0 * r.alpha_star * 180.0 / std::numbers::pi;
    o.report["cap_body_base"] = r.bound_base;
    o.report["piercing_base"] = r.gallai_upper;
    o.report["symmetric_lower_base"] = r.gallai_lower;
    o.report["kl_at_half_pi"] = bounds::kl_exponent(std::numbers::pi / 2);
    o.report["endpoint_difference"] =
        bounds::kl_exponent(std::numbers::pi / 2) - bounds::covering_exponent(std::numbers::pi / 4);
    o.report["table"] = json::array();
    for (const auto& s : r.table) o.report["table"].push_back(json{{"theta", s.theta}, {"kl", s.kl}, {"cover", s.cover}});
    return o;
}

Outcome cmd_cover(int n, double theta, const std::string& method, std::size_t samples, const Common& c,
                  std::ostream& err)
{
    Outcome o;
    o.report["command"] = "cover";
    const Cover cover = greedy_cover(n, theta, c.seed);
    emit(c, io::DirectionSetFile{n, cover.centers, {}, theta, std::nullopt});
    const auto cert = certify(cover, method, samples, c);
    o.report["status"] = cert.passed ? "ok" : "verification_failed";
    o.report["dimension"] = n;
    o.report["theta"] = theta;
    o.report["count"] = cover.centers.size();
    o.report["estimate"] = covering_size_estimate(n, theta);
    o.report["certificate"] = certificate_json(cert);
    o.code = verdict(cert.passed, c, err, "cover certificate failed");
    return o;
}

Outcome cmd_pack(int n, double theta, const Common& c, std::ostream& err)
{
    Outcome o;
    o.report["command"] = "pack";
    const Packing pack = maximal_packing(n, theta, c.seed);
    emit(c, io::DirectionSetFile{n, pack.centers, {}, std::nullopt, theta});
    const auto bad = separation_violation(pack.centers, theta, c.tol);
    o.report["status"] = bad ? "verification_failed" : "ok";
    o.report["dimension"] = n;
    o.report["theta"] = theta;
    o.report["count"] = pack.centers.size();
    if (bad) o.report["pair"] = pair_json(bad->first, bad->second);
    o.code = verdict(!bad, c, err, "packing separation violated");
    return o;
}

Outcome cmd_verify(const std::string& input, const std::string& against, const std::string& method,
                   std::size_t samples, const Common& c, std::ostream& err)
{
    Outcome o;
    o.report["command"] = "verify";
    const auto art = io::read_artifact(input);
    std::optional<io::Artifact> ref;
    if (!against.empty()) ref = io::read_artifact(against);
    bool ok = false;

    if (const auto* pts = std::get_if<io::PointSetFile>(&art)) {
        if (!ref) throw PreconditionError("a point set is verified --against a ball_family");
        const auto family = expect<BallFamily>(*ref, "ball_family");
        require_same_dim(pts->dimension, family.dimension, "verify");
        const auto check = verify_piercing(family, pts->points, c.tol);
        ok = check.ok;
        o.report["check"] = "piercing";
        if (check.unpierced) o.report["witness"] = *check.unpierced;
    } else if (const auto* dirs = std::get_if<io::DirectionSetFile>(&art)) {
        if (ref) {
            const auto body = expect<SpikyBall>(*ref, "spiky_body");
            DirectionSet d{dirs->dimension, dirs->directions, {}};
            d.sources.resize(d.directions.size());
            require_same_dim(d.dimension, body.dimension, "verify");
            const auto check = verifies_illumination(body, d, c.tol);
            ok = check.ok;
            o.report["check"] = "illumination";
            o.report["positive_hull"] = check.positive_hull;
            if (check.unilluminated) o.report["witness"] = *check.unilluminated;
        } else if (dirs->angular_radius) {
            const Cover cover{dirs->dimension, *dirs->angular_radius, dirs->directions};
            const auto cert = certify(cover, method, samples, c);
            ok = cert.passed;
            o.report["check"] = "cover";
            o.report["certificate"] = certificate_json(cert);
        } else if (dirs->separation) {
            const auto bad = separation_violation(dirs->directions, *dirs->separation, c.tol);
            ok = !bad;
            o.report["check"] = "packing";
            if (bad) o.report["pair"] = pair_json(bad->first, bad->second);
        } else {
            throw PreconditionError("direction set has neither angular_radius nor separation; pass --against");
        }
    } else if (const auto* body = std::get_if<SpikyBall>(&art)) {
        const auto check = is_cap_body(*body, c.tol);
        ok = check.ok;
        o.report["check"] = "cap_body";
        if (check.violating) o.report["pair"] = pair_json(check.violating->first, check.violating->second);
    } else {
        const auto& family = std::get<BallFamily>(art);
        const auto pair = find_disjoint_pair(family, c.tol);
        ok = !pair;
        o.report["check"] = "pairwise_intersecting";
        if (pair) o.report["pair"] = pair_json(pair->first, pair->second);
    }
    o.report["status"] = ok ? "ok" : "verification_failed";
    o.report["passed"] = ok;
    o.code = verdict(ok, c, err, "artifact failed verification");
    return o;
}

Outcome cmd_lowerbound(int n, std::size_t target, std::size_t samples, std::size_t max_draws, double epsilon,
                       const Common& c, std::ostream& err)
{
    Outcome o;
    o.report["command"] = "lowerbound";
    SeparatedSetParams params;
    params.epsilon = epsilon;
    params.max_draws = max_draws;
    const auto x = construct_separated_set(n, target, derive_seed(c.seed, 0), params);
    const auto y = symmetrize(x);
    const auto body = build_lower_bound_body(y);
    emit(c, body.spiky());
    const auto rep = multiplicity_report(y, samples, derive_seed(c.seed, 1));

    if (!x.reached_target)
        err << "warning: separated set stopped at " << x.points.size() << " of " << target << " points\n";
    o.report["status"] = "ok";
    o.report["dimension"] = n;
    o.report["target"] = target;
    o.report["reached_target"] = x.reached_target;
    o.report["draws"] = x.draws;
    o.report["separated_size"] = x.points.size();
    o.report["symmetric_size"] = y.points.size();
    o.report["epsilon"] = x.epsilon;
    o.report["predicted_size"] = predicted_separated_size(n, x.epsilon);
    o.report["samples"] = rep.samples;
    o.report["max_multiplicity"] = rep.max;
    o.report["mean_multiplicity"] = rep.mean;
    o.report["histogram"] = rep.histogram;
    o.report["witness"] = rep.witness ? json(*rep.witness) : json(nullptr);
    return o;
}

} // namespace

double parse_angle(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    const auto pos = s.find("pi");
    std::size_t used = 0;
    try {
        if (pos == std::string::npos) {
            const double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        }
        double coef = 1.0;
        std::string head = s.substr(0, pos);
        if (!head.empty() && head.back() == '*') head.pop_back();
        if (!head.empty()) {
            coef = std::stod(head, &used);
            if (used != head.size()) throw std::invalid_argument(s);
        }
        double denom = 1.0;
        const std::string tail = s.substr(pos + 2);
        if (!tail.empty()) {
            if (tail.front() != '/') throw std::invalid_argument(s);
            denom = std::stod(tail.substr(1), &used);
            if (used != tail.size() - 1 || denom == 0.0) throw std::invalid_argument(s);
        }
        return coef * std::numbers::pi / denom;
    } catch (const std::logic_error&) {
        throw ParseError("cannot parse angle \"" + text + "\"");
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Piercing, illumination and spherical covering constructions"};
    app.require_subcommand(1);

    Common c;
    std::string input;
    std::string against;
    std::string theta_text;
    std::optional<std::string> alpha_text;
    std::optional<double> lambda;
    std::optional<double> threshold;
    std::string method = "net";
    std::size_t samples = 10000;
    std::size_t target = 0;
    std::size_t max_draws = 200000;
    double epsilon = 0.0;
    int dim = 0;
    bool raw = false;

    const auto common = [&](CLI::App* sub, bool generates) {
        sub->add_option("--seed", c.seed, "Random seed");
        sub->add_option("--tol", c.tol, "Comparison tolerance")->check(CLI::PositiveNumber);
        if (generates) {
            sub->add_option("--output,-o", c.output, "Artifact file to write");
            sub->add_flag("--skip-verify", c.skip_verify, "Report verification failures as warnings");
        }
    };

    auto* pierce_cmd = app.add_subcommand("pierce", "Pierce a pairwise intersecting ball family");
    pierce_cmd->add_option("input", input, "ball_family file")->required();
    pierce_cmd->add_option("--lambda", lambda, "Scale ratio between radius classes");
    pierce_cmd->add_option("--threshold", threshold, "Normalized radius of large balls");
    common(pierce_cmd, true);

    auto* illum_cmd = app.add_subcommand("illuminate", "Illuminate a cap body");
    illum_cmd->add_option("input", input, "spiky_body file")->required();
    illum_cmd->add_option("--alpha", alpha_text, "Split angle (default: the balancing root)");
    illum_cmd->add_flag("--raw", raw, "Skip the cap-body check; only the final certificate decides");
    common(illum_cmd, true);

    auto* bounds_cmd = app.add_subcommand("bounds", "Print the exponent constants");

    auto* cover_cmd = app.add_subcommand("cover", "Cover the sphere by caps");
    auto* pack_cmd = app.add_subcommand("pack", "Maximal separated set on the sphere");
    for (auto* sub : {cover_cmd, pack_cmd}) {
        sub->add_option("--dim,-n", dim, "Dimension n")->required()->check(CLI::Range(2, 64));
        sub->add_option("--theta", theta_text, "Angle, e.g. 0.5 or pi/3")->required();
        common(sub, true);
    }
    cover_cmd->add_option("--method", method, "Certificate: net or sampled");
    cover_cmd->add_option("--samples", samples, "Samples for the sampled certificate");

    auto* verify_cmd = app.add_subcommand("verify", "Re-check an artifact");
    verify_cmd->add_option("input", input, "Artifact file")->required();
    verify_cmd->add_option("--against", against, "Reference ball_family or spiky_body");
    verify_cmd->add_option("--method", method, "Cover certificate: net or sampled");
    verify_cmd->add_option("--samples", samples, "Samples for the sampled certificate");
    common(verify_cmd, false);

    auto* lower_cmd = app.add_subcommand("lowerbound", "Symmetric separated set and its cap body");
    lower_cmd->add_option("--dim,-n", dim, "Dimension n")->required()->check(CLI::Range(3, 64));
    lower_cmd->add_option("--target", target, "Size of the separated set")->required();
    lower_cmd->add_option("--samples", samples, "Directions sampled for the multiplicity report");
    lower_cmd->add_option("--max-draws", max_draws, "Rejection-sampling budget");
    lower_cmd->add_option("--epsilon", epsilon, "Slack in [0, pi/6) used for the predicted size");
    common(lower_cmd, true);

    std::vector<const char*> argv{"spiky"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kParse;
    }

    std::string name = "spiky";
    Outcome o;
    try {
        if (pierce_cmd->parsed()) {
            name = "pierce";
            o = cmd_pierce(input, c, lambda, threshold, err);
        } else if (illum_cmd->parsed()) {
            name = "illuminate";
            std::optional<double> alpha;
            if (alpha_text) alpha = parse_angle(*alpha_text);
            o = cmd_illuminate(input, c, alpha, raw, err);
        } else if (bounds_cmd->parsed()) {
            name = "bounds";
            o = cmd_bounds();
        } else if (cover_cmd->parsed()) {
            name = "cover";
            o = cmd_cover(dim, parse_angle(theta_text), method, samples, c, err);
        } else if (pack_cmd->parsed()) {
            name = "pack";
            o = cmd_pack(dim, parse_angle(theta_text), c, err);
        } else if (verify_cmd->parsed()) {
            name = "verify";
            o = cmd_verify(input, against, method, samples, c, err);
        } else {
            name = "lowerbound";
            o = cmd_lowerbound(dim, target, samples, max_draws, epsilon, c, err);
        }
    } catch (const std::exception& e) {
        const char* status = "error";
        o.code = kFailure;
        if (dynamic_cast<const ParseError*>(&e)) {
            o.code = kParse;
            status = "parse_error";
        } else if (dynamic_cast<const PreconditionError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
                   dynamic_cast<const DimensionMismatch*>(&e)) {
            o.code = kPrecondition;
            status = "precondition_failed";
        } else if (dynamic_cast<const VerificationError*>(&e) || dynamic_cast<const ResourceLimitError*>(&e)) {
            o.code = kVerification;
            status = "verification_failed";
        }
        o.report = json::object();
        o.report["command"] = name;
        o.report["status"] = status;
        o.report["error"] = e.what();
        err << "error: " << e.what() << "\n";
    }
    o.report["exit_code"] = o.code;
    out << io::dump(o.report);
    return o.code;
}

} // namespace spiky::cli
