#ifndef LPLAB_REPORT_HPP
#define LPLAB_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lplab {

enum class Verdict {
    holds,                // margin >= 0
    holds_with_tolerance, // -tolerance <= margin < 0
    violated,             // margin < -tolerance
    hypothesis_failed,    // the inequality's hypothesis does not hold on the inputs
    precondition_failed,  // an operation precondition does not hold
    no_limit,             // a limit-based quantity failed to converge
};

std::string verdict_name(Verdict v);

Verdict classify_margin(double margin, double tolerance);

/// Structured outcome of one inequality check, oriented so lhs >= rhs is the
/// claim. margin = lhs - rhs, and the metadata records everything
/// needed to reproduce the numbers (grids, resolutions, seed).
struct VerificationReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::holds;
    std::string inputs_digest;
    std::map<std::string, std::string> metadata;  // ordered, so output is stable

    bool passed() const {
        return verdict == Verdict::holds || verdict == Verdict::holds_with_tolerance;
    }

    void set_outcome(double lhs_, double rhs_, double tolerance_);
    std::string to_json() const;
    std::string csv_header() const;
    std::string csv_row() const;
};

/// FNV-1a (64-bit) over a canonical text rendering; used for inputs_digest.
class Digest {
  public:
    Digest& add(const std::string& tag, double value);
    Digest& add(const std::string& tag, const std::string& value);
    Digest& add_doubles(const std::string& tag, const std::vector<double>& values);
    std::string hex() const;

  private:
    void feed(const std::string& text);
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

/// Shortest round-trip decimal rendering of a double (used everywhere a
/// float reaches an output file, so identical runs are byte-identical).
std::string format_double(double v);

} // namespace lplab

#endif
