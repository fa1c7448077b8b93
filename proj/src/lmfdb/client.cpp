#include "rmcond/lmfdb/client.hpp"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

namespace rmcond::lmfdb {

using nlohmann::json;

namespace {

template <typename T>
void override_member(const json& obj, const char* key, T& target)
{
    if (auto it = obj.find(key); it != obj.end()) target = it->get<T>();
}

void override_millis(const json& obj, const char* key, std::chrono::milliseconds& target)
{
    if (auto it = obj.find(key); it != obj.end()) target = std::chrono::milliseconds(it->get<std::int64_t>());
}

class HttplibTransport final : public HttpTransport {
public:
    HttplibTransport(const std::string& base_url, std::chrono::seconds timeout) : client_(base_url), base_url_(base_url)
    {
        client_.set_connection_timeout(timeout);
        client_.set_read_timeout(timeout);
        client_.set_follow_location(true);
    }

    HttpResponse get(const std::string& target) override
    {
        if (!client_.is_valid()) throw NetworkUnavailable("invalid base URL " + base_url_);
        auto res = client_.Get(target);
        if (!res) throw NetworkUnavailable("GET " + base_url_ + target + ": " + httplib::to_string(res.error()));
        HttpResponse out{res->status, res->body, std::nullopt};
        if (res->has_header("Retry-After")) {
            try {
                out.retry_after = std::chrono::seconds(std::stol(res->get_header_value("Retry-After")));
            } catch (const std::exception&) {
                // HTTP-date form; fall back to plain backoff
            }
        }
        return out;
    }

private:
    httplib::Client client_;
    std::string base_url_;
};

bool retryable(int status) { return status == 429 || (status >= 500 && status < 600); }

}  // namespace

ApiConfig api_config_from_json_text(const std::string& text)
{
    ApiConfig cfg;
    json obj;
    try {
        obj = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("API config is not JSON: ") + e.what());
    }
    if (!obj.is_object()) throw std::invalid_argument("API config must be a JSON object");
    try {
        override_member(obj, "base_url", cfg.base_url);
        override_member(obj, "collection_path", cfg.collection_path);
        override_member(obj, "level_field", cfg.level_field);
        override_member(obj, "weight_field", cfg.weight_field);
        override_member(obj, "char_order_field", cfg.char_order_field);
        override_member(obj, "dim_field", cfg.dim_field);
        override_member(obj, "data_key", cfg.data_key);
        override_member(obj, "next_key", cfg.next_key);
        override_member(obj, "extra_query", cfg.extra_query);
        override_member(obj, "max_served_level", cfg.max_served_level);
        override_member(obj, "max_retries", cfg.max_retries);
        override_millis(obj, "min_interval_ms", cfg.min_interval);
        override_millis(obj, "backoff_base_ms", cfg.backoff_base);
        if (auto it = obj.find("timeout_s"); it != obj.end()) cfg.timeout = std::chrono::seconds(it->get<std::int64_t>());
    } catch (const json::type_error& e) {
        throw std::invalid_argument(std::string("API config: ") + e.what());
    }
    return cfg;
}

ApiConfig load_api_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open API config " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return api_config_from_json_text(buf.str());
}

std::unique_ptr<HttpTransport> make_http_transport(const std::string& base_url, std::chrono::seconds timeout)
{
    return std::make_unique<HttplibTransport>(base_url, timeout);
}

LmfdbClient::LmfdbClient(ApiConfig config, std::unique_ptr<HttpTransport> transport, Sleeper sleeper)
    : config_(std::move(config)), transport_(std::move(transport)), sleeper_(std::move(sleeper))
{
    if (!sleeper_) sleeper_ = [](std::chrono::milliseconds ms) { std::this_thread::sleep_for(ms); };
}

std::string LmfdbClient::query_target(const Natural& level) const
{
    std::string target = config_.collection_path + "?" + config_.level_field + "=" + level.str() + "&" +
                         config_.weight_field + "=2&" + config_.char_order_field + "=1&_fields=" + config_.dim_field;
    if (!config_.extra_query.empty()) target += "&" + config_.extra_query;
    return target;
}

std::size_t LmfdbClient::requests_issued() const
{
    std::lock_guard lock(mutex_);
    return requests_;
}

HttpResponse LmfdbClient::get_with_retry(const std::string& target)
{
    for (int attempt = 0;; ++attempt) {
        if (last_request_) {
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                                 *last_request_);
            if (elapsed < config_.min_interval) sleeper_(config_.min_interval - elapsed);
        }
        last_request_ = std::chrono::steady_clock::now();
        ++requests_;
        HttpResponse res = transport_->get(target);
        if (res.status == 200) return res;
        if (!retryable(res.status) || attempt >= config_.max_retries) {
            throw ServiceError(res.status, res.retry_after,
                               "LMFDB returned HTTP " + std::to_string(res.status) + " for " + target);
        }
        auto delay = config_.backoff_base * (1LL << std::min(attempt, 20));
        if (res.retry_after) delay = std::max<std::chrono::milliseconds>(delay, *res.retry_after);
        sleeper_(delay);
    }
}

std::vector<Natural> LmfdbClient::fetch_dims(const Natural& level)
{
    std::lock_guard lock(mutex_);
    std::vector<Natural> dims;
    std::string target = query_target(level);
    for (int page = 0; page < 1000; ++page) {
        HttpResponse res = get_with_retry(target);
        json body;
        try {
            body = json::parse(res.body);
        } catch (const json::parse_error& e) {
            throw MalformedResponse("response for level " + level.str() + " is not JSON: " + e.what());
        }
        auto data = body.is_object() ? body.find(config_.data_key) : body.end();
        if (!body.is_object() || data == body.end() || !data->is_array()) {
            throw MalformedResponse("response for level " + level.str() + " has no '" + config_.data_key + "' array");
        }
        for (const auto& rec : *data) {
            auto dim = rec.is_object() ? rec.find(config_.dim_field) : rec.end();
            if (!rec.is_object() || dim == rec.end() || !dim->is_number_unsigned() || dim->get<std::uint64_t>() == 0) {
                throw MalformedResponse("record at level " + level.str() + " lacks a positive '" + config_.dim_field + "'");
            }
            dims.emplace_back(dim->get<std::uint64_t>());
        }
        auto next = body.find(config_.next_key);
        if (next == body.end() || !next->is_string() || next->get<std::string>().empty()) {
            std::sort(dims.begin(), dims.end());
            return dims;
        }
        target = next->get<std::string>();
        if (target.rfind(config_.base_url, 0) == 0) target.erase(0, config_.base_url.size());
    }
    throw MalformedResponse("pagination for level " + level.str() + " did not terminate");
}

}  // namespace rmcond::lmfdb
