#include "rmcond/lmfdb/cache.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

namespace rmcond::lmfdb {

using nlohmann::json;

std::string format_cache_line(const OrbitEntry& entry)
{
    if (!entry.level.fits_u64()) throw std::invalid_argument("cache levels are limited to 64 bits");
    std::vector<Natural> dims = entry.dims;
    std::sort(dims.begin(), dims.end());
    std::string out = "{\"level\": " + entry.level.str() + ", \"weight\": " + std::to_string(entry.weight) +
                      ", \"char_trivial\": " + (entry.char_trivial ? "true" : "false") + ", \"dims\": [";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out += ", ";
        out += dims[i].str();
    }
    out += "], \"fetched_at\": " + json(entry.fetched_at).dump();
    if (!entry.complete) out += ", \"complete\": false";
    out += "}";
    return out;
}

namespace {

Natural natural_member(const json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_unsigned()) {
        throw MalformedResponse(std::string("cache line: '") + key + "' must be a non-negative integer");
    }
    return Natural(it->get<std::uint64_t>());
}

}  // namespace

OrbitEntry parse_cache_line(std::string_view line)
{
    json obj;
    try {
        obj = json::parse(line);
    } catch (const json::parse_error& e) {
        throw MalformedResponse(std::string("cache line is not JSON: ") + e.what());
    }
    if (!obj.is_object()) throw MalformedResponse("cache line is not a JSON object");

    OrbitEntry entry;
    entry.level = natural_member(obj, "level");
    if (entry.level.is_zero()) throw MalformedResponse("cache line: level must be positive");
    if (natural_member(obj, "weight") != 2) throw MalformedResponse("cache line: only weight 2 is stored");

    auto ct = obj.find("char_trivial");
    if (ct == obj.end() || !ct->is_boolean()) throw MalformedResponse("cache line: 'char_trivial' must be a boolean");
    if (!ct->get<bool>()) throw MalformedResponse("cache line: only trivial character is stored");

    auto dims = obj.find("dims");
    if (dims == obj.end() || !dims->is_array()) throw MalformedResponse("cache line: 'dims' must be an array");
    for (const auto& d : *dims) {
        if (!d.is_number_unsigned() || d.get<std::uint64_t>() == 0) {
            throw MalformedResponse("cache line: orbit dimensions must be positive integers");
        }
        entry.dims.emplace_back(d.get<std::uint64_t>());
    }
    std::sort(entry.dims.begin(), entry.dims.end());

    auto ts = obj.find("fetched_at");
    if (ts == obj.end() || !ts->is_string()) throw MalformedResponse("cache line: 'fetched_at' must be a string");
    entry.fetched_at = ts->get<std::string>();

    if (auto c = obj.find("complete"); c != obj.end()) {
        if (!c->is_boolean()) throw MalformedResponse("cache line: 'complete' must be a boolean");
        entry.complete = c->get<bool>();
    }
    return entry;
}

OrbitCache::OrbitCache(std::filesystem::path path) : path_(std::move(path)) { reload(); }

void OrbitCache::reload()
{
    std::map<Natural, OrbitEntry> entries;
    std::size_t skipped = 0;
    std::ifstream in(path_, std::ios::binary);
    if (in) {
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        std::size_t start = 0;
        // A trailing fragment without LF is a write in progress; ignore it.
        for (std::size_t nl; (nl = text.find('\n', start)) != std::string::npos; start = nl + 1) {
            std::string_view line(text.data() + start, nl - start);
            if (line.empty()) continue;
            try {
                OrbitEntry e = parse_cache_line(line);
                Natural level = e.level;
                entries.insert_or_assign(std::move(level), std::move(e));
            } catch (const MalformedResponse&) {
                ++skipped;
            }
        }
    }
    std::unique_lock lock(mutex_);
    entries_ = std::move(entries);
    skipped_ = skipped;
}

std::optional<OrbitEntry> OrbitCache::find(const Natural& level) const
{
    std::shared_lock lock(mutex_);
    auto it = entries_.find(level);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void OrbitCache::append(const OrbitEntry& entry)
{
    const std::string line = format_cache_line(entry) + "\n";
    std::unique_lock lock(mutex_);
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.flush();
    if (!out) throw std::runtime_error("failed to append to cache " + path_.string());
    entries_.insert_or_assign(entry.level, entry);
}

std::size_t OrbitCache::size() const
{
    std::shared_lock lock(mutex_);
    return entries_.size();
}

std::size_t OrbitCache::skipped_lines() const
{
    std::shared_lock lock(mutex_);
    return skipped_;
}

std::vector<OrbitEntry> load_fixture_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open fixture file " + path.string());
    std::vector<OrbitEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(parse_cache_line(line));
    }
    return out;
}

}  // namespace rmcond::lmfdb
