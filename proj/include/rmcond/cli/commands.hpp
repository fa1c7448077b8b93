#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace rmcond::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,
    exit_data_error = 3,
};

// Where orbit data comes from.
struct DataSettings {
    std::optional<std::filesystem::path> cache_path;
    std::string base_url;  // empty: the api config default
    bool offline = false;
    std::optional<std::filesystem::path> api_config;
};

using EnvLookup = std::function<std::optional<std::string>(const char*)>;

// RMCOND_LMFDB_URL and RMCOND_CACHE, when set and non-empty, replace the
// base URL and cache path given on the command line.
DataSettings resolve_data_settings(DataSettings flags, const EnvLookup& env);

std::optional<std::string> process_env(const char* name);

// Parses argv and runs one command, writing results to `out` and
// diagnostics to `err`. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const EnvLookup& env = process_env);

}  // namespace rmcond::cli
