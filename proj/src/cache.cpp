#include "magb/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "magb/serialize.hpp"

namespace fs = std::filesystem;

namespace magb {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("MAGBRAUER_CACHE")) return env;
    return ".magbrauer-cache";
}

std::string cohomology_cache_key(const MagneticGroup& m, const CoefficientModel& model, int degree,
                                 bool bockstein) {
    std::ostringstream os;
    os << m.canonical_key() << "|model:" << model.name() << "|deg:" << degree
       << "|bockstein:" << (bockstein ? 1 : 0);
    return os.str();
}

namespace {

std::string key_path(const std::string& dir, const std::string& key) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a64(key));
    return (fs::path(dir) / (std::string(buf) + ".json")).string();
}

std::optional<CohomologyGroup> try_load(const std::string& dir, const std::string& key) {
    std::string path = key_path(dir, key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        json j;
        in >> j;
        if (j.at("engine_version").get<std::string>() != kEngineVersion) return std::nullopt;
        if (j.at("key").get<std::string>() != key) return std::nullopt;  // hash collision
        return cohomology_group_from_json(j.at("payload"));
    } catch (...) {
        return std::nullopt;  // unreadable entries are treated as misses
    }
}

void store(const std::string& dir, const std::string& key, const CohomologyGroup& h) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return;  // caching is best-effort
    json j;
    j["engine_version"] = kEngineVersion;
    j["key"] = key;
    j["payload"] = cohomology_group_to_json(h);
    std::string path = key_path(dir, key);
    std::random_device rd;
    std::string tmp = path + ".tmp" + std::to_string(rd() % 1000000);
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump();
    }
    fs::rename(tmp, path, ec);
    if (ec) fs::remove(tmp, ec);
}

}  // namespace

CohomologyGroup cohomology_cached(const MagneticGroup& m, CoefficientModel model, int degree,
                                  const Budget& budget, const std::string& dir, bool* from_cache) {
    if (from_cache) *from_cache = false;
    if (dir.empty()) return cohomology(m, model, degree, budget);
    std::string key = cohomology_cache_key(m, model, degree, false);
    if (auto hit = try_load(dir, key)) {
        if (from_cache) *from_cache = true;
        return std::move(*hit);
    }
    CohomologyGroup h = cohomology(m, model, degree, budget);
    store(dir, key, h);
    return h;
}

CohomologyGroup h2_units_cached(const MagneticGroup& m, const Budget& budget,
                                const std::string& dir, bool* from_cache) {
    if (from_cache) *from_cache = false;
    if (dir.empty()) return h2_units(m, budget);
    std::string key = cohomology_cache_key(m, model_QmodZ(), 2, true);
    if (auto hit = try_load(dir, key)) {
        if (from_cache) *from_cache = true;
        return std::move(*hit);
    }
    CohomologyGroup h = h2_units(m, budget);
    store(dir, key, h);
    return h;
}

std::vector<CacheEntryInfo> cache_inspect(const std::string& dir) {
    std::vector<CacheEntryInfo> out;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream in(entry.path());
        if (!in) continue;
        try {
            json j;
            in >> j;
            out.push_back({entry.path().filename().string(), j.at("key").get<std::string>(),
                           j.at("engine_version").get<std::string>()});
        } catch (...) {
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CacheEntryInfo& a, const CacheEntryInfo& b) { return a.file < b.file; });
    return out;
}

std::size_t cache_clear(const std::string& dir) {
    std::size_t removed = 0;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (entry.path().extension() != ".json") continue;
        if (fs::remove(entry.path(), ec)) ++removed;
    }
    return removed;
}

}  // namespace magb
