#include "lplab/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace lplab {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::holds_with_tolerance: return "holds_with_tolerance";
        case Verdict::violated: return "violated";
        case Verdict::hypothesis_failed: return "hypothesis_failed";
        case Verdict::precondition_failed: return "precondition_failed";
        case Verdict::no_limit: return "no_limit";
    }
    return "?";
}

Verdict classify_margin(double margin, double tolerance) {
    if (margin >= 0.0) return Verdict::holds;
    if (margin >= -tolerance) return Verdict::holds_with_tolerance;
    return Verdict::violated;
}

void VerificationReport::set_outcome(double lhs_, double rhs_, double tolerance_) {
    lhs = lhs_;
    rhs = rhs_;
    margin = lhs_ - rhs_;
    tolerance = tolerance_;
    verdict = classify_margin(margin, tolerance);
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    // shortest representation that round-trips
    for (int prec = 1; prec <= 17; ++prec) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) return buf;
    }
    return "0";
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["margin"] = margin;
    j["tolerance"] = tolerance;
    j["verdict"] = verdict_name(verdict);
    j["inputs_digest"] = inputs_digest;
    nlohmann::ordered_json meta;
    for (const auto& [k, v] : metadata) meta[k] = v;
    j["metadata"] = meta;
    return j.dump(2);
}

std::string VerificationReport::csv_header() const {
    std::ostringstream os;
    os << "name,lhs,rhs,margin,tolerance,verdict,inputs_digest";
    for (const auto& [k, v] : metadata) os << "," << k;
    return os.str();
}

std::string VerificationReport::csv_row() const {
    std::ostringstream os;
    os << name << "," << format_double(lhs) << "," << format_double(rhs) << ","
       << format_double(margin) << "," << format_double(tolerance) << ","
       << verdict_name(verdict) << "," << inputs_digest;
    for (const auto& [k, v] : metadata) os << "," << v;
    return os.str();
}

void Digest::feed(const std::string& text) {
    for (unsigned char c : text) {
        state_ ^= c;
        state_ *= 0x100000001b3ULL;
    }
}

Digest& Digest::add(const std::string& tag, double value) {
    feed(tag);
    feed("=");
    feed(format_double(value));
    feed(";");
    return *this;
}

Digest& Digest::add(const std::string& tag, const std::string& value) {
    feed(tag);
    feed("=");
    feed(value);
    feed(";");
    return *this;
}

Digest& Digest::add_doubles(const std::string& tag, const std::vector<double>& values) {
    feed(tag);
    feed("=[");
    for (double v : values) {
        feed(format_double(v));
        feed(",");
    }
    feed("];");
    return *this;
}

std::string Digest::hex() const {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state_));
    return buf;
}

} // namespace lplab
