#pragma once

#include "rmcond/lmfdb/records.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace rmcond::lmfdb {

// Endpoint and schema of the newform collection. The service has renamed
// fields before, so none of this is hard-wired into the query code.
struct ApiConfig {
    std::string base_url = "https://www.lmfdb.org";
    std::string collection_path = "/api/mf_newforms/";
    std::string level_field = "level";
    std::string weight_field = "weight";
    std::string char_order_field = "char_order";
    std::string dim_field = "dim";
    std::string data_key = "data";
    std::string next_key = "next";
    std::string extra_query = "_format=json";
    // Largest level for which the service holds complete decompositions.
    std::uint64_t max_served_level = 10000;
    std::chrono::milliseconds min_interval{500};
    std::chrono::milliseconds backoff_base{1000};
    int max_retries = 5;
    std::chrono::seconds timeout{30};
};

// JSON object whose members override the defaults, e.g. {"dim_field": "dimension"}.
ApiConfig load_api_config(const std::filesystem::path& path);
ApiConfig api_config_from_json_text(const std::string& text);

struct HttpResponse {
    int status = 0;
    std::string body;
    std::optional<std::chrono::seconds> retry_after;
};

class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    // `target` is path plus query string. Throws NetworkUnavailable when
    // no connection can be made.
    virtual HttpResponse get(const std::string& target) = 0;
};

std::unique_ptr<HttpTransport> make_http_transport(const std::string& base_url, std::chrono::seconds timeout);

using Sleeper = std::function<void(std::chrono::milliseconds)>;

// Rate-limited query client: one request in flight, at least min_interval
// between request starts, exponential backoff on 429 and 5xx.
class LmfdbClient {
public:
    LmfdbClient(ApiConfig config, std::unique_ptr<HttpTransport> transport, Sleeper sleeper = {});

    // Orbit degrees of weight-2 trivial-character newforms at `level`,
    // following pagination. Throws ServiceError or MalformedResponse.
    std::vector<Natural> fetch_dims(const Natural& level);

    std::string query_target(const Natural& level) const;
    std::size_t requests_issued() const;
    const ApiConfig& config() const noexcept { return config_; }

private:
    HttpResponse get_with_retry(const std::string& target);

    ApiConfig config_;
    std::unique_ptr<HttpTransport> transport_;
    Sleeper sleeper_;
    mutable std::mutex mutex_;
    std::optional<std::chrono::steady_clock::time_point> last_request_;
    std::size_t requests_ = 0;
};

}  // namespace rmcond::lmfdb
