#pragma once

// Geometry files:
//   {"outer": [{"center": [x, y, ...], "radius": r}, ...],
//    "inner": [{"center": [...], "radius": r, "gamma": g (optional)}, ...]}

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "geometry.hpp"

namespace harmspec {

struct Geometry {
    DomainUnion outer;
    DomainUnion inner;
    std::vector<std::optional<double>> inner_gamma; ///< per inner ball, if given
};

namespace detail {

inline BallSpec ball_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("center") || !j.contains("radius"))
        throw DomainError("geometry: every ball needs \"center\" and \"radius\"");
    return BallSpec(j.at("center").get<std::vector<double>>(), j.at("radius").get<double>());
}

inline nlohmann::json ball_to_json(const BallSpec& b)
{
    return {{"center", b.center}, {"radius", b.radius}};
}

} // namespace detail

inline Geometry geometry_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("outer") || !j.contains("inner"))
        throw DomainError("geometry: expected an object with \"outer\" and \"inner\" lists");
    std::vector<BallSpec> outer, inner;
    Geometry g;
    for (const auto& b : j.at("outer"))
        outer.push_back(detail::ball_from_json(b));
    for (const auto& b : j.at("inner")) {
        inner.push_back(detail::ball_from_json(b));
        if (b.contains("gamma"))
            g.inner_gamma.emplace_back(b.at("gamma").get<double>());
        else
            g.inner_gamma.emplace_back(std::nullopt);
    }
    g.outer = DomainUnion(std::move(outer));
    g.inner = DomainUnion(std::move(inner));
    if (g.outer.dim() != g.inner.dim())
        throw MismatchError("geometry: outer and inner balls have different dimensions");
    return g;
}

inline nlohmann::json geometry_to_json(const Geometry& g)
{
    nlohmann::json out{{"outer", nlohmann::json::array()}, {"inner", nlohmann::json::array()}};
    for (const auto& b : g.outer.balls)
        out["outer"].push_back(detail::ball_to_json(b));
    for (std::size_t i = 0; i < g.inner.balls.size(); ++i) {
        auto jb = detail::ball_to_json(g.inner.balls[i]);
        if (i < g.inner_gamma.size() && g.inner_gamma[i])
            jb["gamma"] = *g.inner_gamma[i];
        out["inner"].push_back(jb);
    }
    return out;
}

inline Geometry load_geometry(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open geometry file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("geometry file " + path + ": " + e.what());
    }
    try {
        return geometry_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("geometry file " + path + ": " + e.what());
    }
}

} // namespace harmspec
