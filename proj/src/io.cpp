#include "arclab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace arclab {

namespace {

ArcData assemble(std::uint32_t p, std::uint32_t h, int k, int n,
                 const std::vector<std::vector<std::uint32_t>>& rows) {
    if (k < 1) throw std::invalid_argument("arc data: k must be positive");
    if (n < 0) throw std::invalid_argument("arc data: negative point count");
    Field f = Field::make(p, h);
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("arc data: point count does not match header");
    std::vector<Vek> points;
    points.reserve(rows.size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != k)
            throw std::invalid_argument("arc data: row length does not match k");
        Vek v;
        v.reserve(row.size());
        for (std::uint32_t code : row) v.push_back(f.element(code));
        points.push_back(std::move(v));
    }
    return ArcData{std::move(f), k, std::move(points)};
}

} // namespace

ArcData load_arc_text(std::istream& in) {
    std::uint32_t p = 0, h = 0;
    int k = 0, n = 0;
    if (!(in >> p >> h >> k >> n))
        throw std::invalid_argument("arc data: bad header, expected \"p h k n\"");
    std::vector<std::vector<std::uint32_t>> rows(static_cast<std::size_t>(std::max(n, 0)));
    for (auto& row : rows) {
        row.resize(static_cast<std::size_t>(k));
        for (std::uint32_t& code : row)
            if (!(in >> code)) throw std::invalid_argument("arc data: truncated point row");
    }
    return assemble(p, h, k, n, rows);
}

void save_arc_text(std::ostream& out, const Field& f, int k, const std::vector<Vek>& points) {
    out << f.p() << ' ' << f.h() << ' ' << k << ' ' << points.size() << '\n';
    for (const Vek& v : points) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].code;
        out << '\n';
    }
}

ArcData load_arc_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("arc data: invalid JSON: ") + e.what());
    }
    try {
        const auto p = j.at("p").get<std::uint32_t>();
        const auto h = j.at("h").get<std::uint32_t>();
        const auto k = j.at("k").get<int>();
        const auto n = j.at("n").get<int>();
        const auto rows = j.at("points").get<std::vector<std::vector<std::uint32_t>>>();
        return assemble(p, h, k, n, rows);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("arc data: bad JSON fields: ") + e.what());
    }
}

void save_arc_json(std::ostream& out, const Field& f, int k, const std::vector<Vek>& points) {
    nlohmann::json rows = nlohmann::json::array();
    for (const Vek& v : points) {
        nlohmann::json row = nlohmann::json::array();
        for (const Fe& c : v) row.push_back(c.code);
        rows.push_back(std::move(row));
    }
    const nlohmann::json j{{"p", f.p()},
                           {"h", f.h()},
                           {"k", k},
                           {"n", points.size()},
                           {"points", std::move(rows)}};
    out << j.dump(2) << '\n';
}

ArcData load_arc_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    int c;
    while ((c = in.peek()) != std::ifstream::traits_type::eof() &&
           std::isspace(static_cast<unsigned char>(c)))
        in.get();
    if (c == '{') return load_arc_json(in);
    return load_arc_text(in);
}

Arc to_arc(const ArcData& data) { return Arc(data.field, data.k, data.points); }

} // namespace arclab
