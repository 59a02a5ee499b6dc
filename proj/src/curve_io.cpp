#include "cfrechet/curve_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace cfrechet {

using nlohmann::json;

ClosedCurve read_curve_json(std::istream& in, const std::string& what) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(what + ": invalid JSON: " + e.what());
    }
    if (!j.is_object()) throw std::runtime_error(what + ": expected a JSON object");
    if (!j.contains("closed") || !j["closed"].is_boolean() || !j["closed"].get<bool>())
        throw std::runtime_error(what + ": \"closed\" must be present and true");
    if (!j.contains("dimension") || !j["dimension"].is_number_unsigned() ||
        j["dimension"].get<std::uint64_t>() == 0)
        throw std::runtime_error(what + ": \"dimension\" must be a positive integer");
    const std::size_t dim = j["dimension"].get<std::size_t>();
    if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
        throw std::runtime_error(what + ": \"points\" must be a non-empty array");

    std::vector<double> coords;
    coords.reserve(j["points"].size() * dim);
    for (const auto& pt : j["points"]) {
        if (!pt.is_array() || pt.size() != dim)
            throw std::runtime_error(what + ": each point must be an array of " +
                                     std::to_string(dim) + " numbers");
        for (const auto& v : pt) {
            if (!v.is_number())
                throw std::runtime_error(what + ": point coordinates must be numbers");
            const double d = v.get<double>();
            if (!std::isfinite(d))
                throw std::runtime_error(what + ": point coordinates must be finite");
            coords.push_back(d);
        }
    }
    return ClosedCurve(dim, std::move(coords));
}

ClosedCurve read_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_curve_json(in, path);
}

void write_curve_json(std::ostream& out, const ClosedCurve& c) {
    json pts = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
        json p = json::array();
        for (double v : c.vertex(i)) p.push_back(v);
        pts.push_back(std::move(p));
    }
    const json j{{"closed", true}, {"dimension", c.dimension()}, {"points", std::move(pts)}};
    out << j.dump(2) << '\n';
}

void write_curve_file(const std::string& path, const ClosedCurve& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_curve_json(out, c);
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace cfrechet
