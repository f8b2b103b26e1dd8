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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tiltfock {

struct CacheEntry {
  std::string key;
  std::string params;
  std::string version;
  std::int64_t created = 0;  // seconds since the epoch
  std::string payload;
};

/// File-per-entry store of rendered command output.  Entries are keyed by a
/// hash of the command parameters and the code version.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir, std::string version);
  /// $TILTFOCK_CACHE_DIR, else $XDG_CACHE_HOME/tiltfock, else ~/.cache/tiltfock.
  static std::filesystem::path default_directory();

  const std::filesystem::path& directory() const { return dir_; }
  std::string key(const std::string& params) const;

  std::optional<std::string> get(const std::string& params) const;
  /// Writes to a temporary file and renames it into place.
  void put(const std::string& params, const std::string& payload) const;
  /// Entries sorted by key.  Unreadable files are skipped.
  std::vector<CacheEntry> entries() const;
  /// Removes every entry and returns how many were removed.
  std::size_t clear() const;

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
  std::string version_;
};

std::uint64_t fnv1a(const std::string& data);

}  // namespace tiltfock
