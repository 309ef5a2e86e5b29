// SPDX-License-Identifier: Apache-2.0
#include "symbell/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "symbell/report_json.hpp"
#include "symbell/util.hpp"

namespace symbell {

namespace fs = std::filesystem;

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char* env = std::getenv("SYMBELL_CACHE");
    return env ? std::string(env) : std::string();
}

std::string spectral_cache_key(const PauliSum& sum, const std::string& method,
                               const DenseOptions& dense, const IterOptions& iter) {
    std::ostringstream desc;
    desc << sum.hash_hex() << '|' << method << '|';
    char buf[64];
    if (method == "dense") {
        std::snprintf(buf, sizeof buf, "extremal_tol=%.17g", dense.extremal_tol);
        desc << buf;
    } else {
        std::snprintf(buf, sizeof buf, "tol=%.17g|max_iter=%ld|seed=%llu", iter.tol,
                      iter.max_iter, static_cast<unsigned long long>(iter.seed));
        desc << buf;
    }
    return method + "-" + hex64(fnv1a64(desc.str()));
}

std::optional<SpectralReport> cache_load(const std::string& dir, const std::string& key) {
    if (dir.empty()) return std::nullopt;
    fs::path path = fs::path(dir) / (key + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        return spectral_report_from_json(j.at("report"));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void cache_store(const std::string& dir, const std::string& key,
                 const SpectralReport& report) {
    if (dir.empty()) return;
    try {
        fs::create_directories(dir);
        fs::path final_path = fs::path(dir) / (key + ".json");
        fs::path tmp_path = final_path;
        tmp_path += ".tmp" + std::to_string(::getpid());
        {
            std::ofstream out(tmp_path);
            if (!out) return;
            out << nlohmann::json{{"key", key}, {"report", to_json(report)}}.dump(2)
                << '\n';
        }
        fs::rename(tmp_path, final_path);
    } catch (const std::exception&) {
        // cache is advisory only
    }
}

}  // namespace symbell
