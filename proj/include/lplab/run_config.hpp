#ifndef LPLAB_RUN_CONFIG_HPP
#define LPLAB_RUN_CONFIG_HPP

#include <map>
#include <ostream>
#include <string>

namespace lplab {

/// Flat key-value run description. A config file holds `key = value` lines
/// (# comments allowed); command-line flags overwrite file entries.
struct RunConfig {
    std::map<std::string, std::string> kv;

    static RunConfig from_file(const std::string& path);

    void set(const std::string& key, const std::string& value) { kv[key] = value; }
    bool has(const std::string& key) const { return kv.count(key) > 0; }
    std::string get(const std::string& key, const std::string& fallback = "") const;
};

/// Executes the configured command (verify / sweep / demo), writing report
/// output to `out` or to the configured output path.
/// Returns the process exit code: 0 when every verdict passes, 2 when some
/// verdict does not, 1 on configuration or domain errors.
/// The environment variable LPLAB_SEED overrides a config-file seed but not
/// a seed passed as a flag (flags record seed_source=flag).
int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace lplab

#endif
