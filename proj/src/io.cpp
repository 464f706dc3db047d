#include "lplab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lplab {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, int line, const std::string& what) {
    std::ostringstream os;
    os << path << ":" << line << ": " << what;
    throw std::runtime_error(os.str());
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return in;
}

ordered_json parse_json_file(const std::string& path) {
    auto in = open_in(path);
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(path, 1, e.what());
    }
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

void write_grid_function(const GridFunction& f, const std::string& base,
                         std::optional<double> s) {
    ordered_json j;
    j["lo"] = f.grid().box.lo;
    j["hi"] = f.grid().box.hi;
    j["shape"] = f.grid().shape;
    if (s) j["s"] = *s;
    open_out(base + ".json") << j.dump(2) << "\n";

    auto out = open_out(base + ".csv");
    for (double v : f.values()) out << format_double(v) << "\n";
}

LoadedFunction read_grid_function(const std::string& base) {
    const std::string header = base + ".json";
    const ordered_json j = parse_json_file(header);
    if (!j.contains("lo") || !j.contains("hi") || !j.contains("shape"))
        fail(header, 1, "expected keys lo, hi, shape");
    Box box(j["lo"].get<std::vector<double>>(), j["hi"].get<std::vector<double>>());
    Grid grid(std::move(box), j["shape"].get<std::vector<int>>());

    const std::string values_path = base + ".csv";
    auto in = open_in(values_path);
    std::vector<double> values;
    values.reserve(grid.size());
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            values.push_back(std::stod(line));
        } catch (const std::exception&) {
            fail(values_path, lineno, "not a number: '" + line + "'");
        }
    }
    if (values.size() != grid.size())
        fail(values_path, lineno,
             "expected " + std::to_string(grid.size()) + " values, got " +
                 std::to_string(values.size()));

    LoadedFunction loaded{GridFunction(std::move(grid), std::move(values)), std::nullopt};
    if (j.contains("s")) loaded.s = j["s"].get<double>();
    return loaded;
}

void write_set_csv(const DiscreteSet& A, const std::string& path) {
    auto out = open_out(path);
    for (const auto& p : A.points) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << format_double(p[i]);
        out << "\n";
    }
}

void write_set_json(const DiscreteSet& A, const std::string& path) {
    ordered_json j;
    j["dim"] = A.n;
    j["points"] = A.points;
    open_out(path) << j.dump(2) << "\n";
}

namespace {

DiscreteSet read_set_csv(const std::string& path) {
    auto in = open_in(path);
    std::vector<Point> pts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Point p;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            try {
                p.push_back(std::stod(cell));
            } catch (const std::exception&) {
                fail(path, lineno, "not a number: '" + cell + "'");
            }
        }
        if (!pts.empty() && p.size() != pts.front().size())
            fail(path, lineno, "inconsistent dimension");
        pts.push_back(std::move(p));
    }
    if (pts.empty()) fail(path, lineno, "empty point set");
    return DiscreteSet(std::move(pts));
}

DiscreteSet read_set_json(const std::string& path) {
    const ordered_json j = parse_json_file(path);
    if (!j.contains("dim") || !j.contains("points")) fail(path, 1, "expected keys dim, points");
    auto pts = j["points"].get<std::vector<Point>>();
    const int n = j["dim"].get<int>();
    for (const auto& p : pts)
        if (static_cast<int>(p.size()) != n) fail(path, 1, "point dimension != dim");
    if (pts.empty()) fail(path, 1, "empty point set");
    return DiscreteSet(std::move(pts));
}

} // namespace

DiscreteSet read_set(const std::string& path) {
    if (ends_with(path, ".json")) return read_set_json(path);
    if (ends_with(path, ".csv")) return read_set_csv(path);
    throw std::runtime_error("unknown point-set format (want .csv or .json): " + path);
}

void write_support_values(const std::vector<SupportValue>& table, const std::string& path) {
    auto out = open_out(path);
    for (const auto& sv : table) {
        for (double c : sv.direction) out << format_double(c) << ",";
        out << format_double(sv.value) << "\n";
    }
}

void write_report_json(const VerificationReport& r, const std::string& path) {
    open_out(path) << r.to_json() << "\n";
}

void write_reports_csv(const std::vector<VerificationReport>& rs, const std::string& path) {
    auto out = open_out(path);
    if (rs.empty()) return;
    out << rs.front().csv_header() << "\n";
    for (const auto& r : rs) out << r.csv_row() << "\n";
}

void write_profile_csv(const GridFunction& f, const std::string& path) {
    auto out = open_out(path);
    for (std::size_t i = 0; i < f.grid().size(); ++i) {
        const Point p = f.grid().node(i);
        for (double c : p) out << format_double(c) << ",";
        out << format_double(f.value(i)) << "\n";
    }
}

} // namespace lplab
