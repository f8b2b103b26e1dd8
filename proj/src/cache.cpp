// Copyright 2026 The tiltfock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tiltfock/cache.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace tiltfock {

namespace fs = std::filesystem;

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Cache::Cache(fs::path dir, std::string version) : dir_(std::move(dir)), version_(std::move(version)) {}

fs::path Cache::default_directory() {
  if (const char* d = std::getenv("TILTFOCK_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return fs::path(d) / "tiltfock";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "tiltfock";
  return fs::temp_directory_path() / "tiltfock-cache";
}

std::string Cache::key(const std::string& params) const {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(params + '\n' + version_);
  return os.str();
}

fs::path Cache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<std::string> Cache::get(const std::string& params) const {
  std::ifstream in(path_for(key(params)), std::ios::binary);
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    // a hash collision or a stale format is treated as a miss
    if (j.at("params") != params || j.at("version") != version_) return std::nullopt;
    return j.at("payload").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void Cache::put(const std::string& params, const std::string& payload) const {
  fs::create_directories(dir_);
  const std::string k = key(params);
  const auto created = std::chrono::duration_cast<std::chrono::seconds>(
                           std::chrono::system_clock::now().time_since_epoch())
                           .count();
  nlohmann::json j;
  j["key"] = k;
  j["params"] = params;
  j["version"] = version_;
  j["created"] = created;
  j["payload"] = payload;
  std::random_device rd;
  const fs::path tmp = dir_ / (k + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << j.dump();
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, path_for(k));
}

std::vector<CacheEntry> Cache::entries() const {
  std::vector<CacheEntry> out;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return out;
  for (const auto& f : fs::directory_iterator(dir_)) {
    if (f.path().extension() != ".json") continue;
    std::ifstream in(f.path(), std::ios::binary);
    try {
      const auto j = nlohmann::json::parse(in);
      out.push_back({j.at("key"), j.at("params"), j.at("version"), j.at("created"), j.at("payload")});
    } catch (const nlohmann::json::exception&) {
    }
  }
  std::sort(out.begin(), out.end(), [](const CacheEntry& a, const CacheEntry& b) { return a.key < b.key; });
  return out;
}

std::size_t Cache::clear() const {
  std::size_t n = 0;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return 0;
  std::vector<fs::path> victims;
  for (const auto& f : fs::directory_iterator(dir_)) {
    const auto ext = f.path().extension().string();
    if (ext == ".json" || ext.rfind(".tmp", 0) == 0) victims.push_back(f.path());
  }
  for (const auto& p : victims)
    if (fs::remove(p, ec)) ++n;
  return n;
}

}  // namespace tiltfock
