// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace dtou::store {

struct PolicyRecord {
  std::string data_uri;
  std::string document;  // Turtle text
  std::string created_at;
  /// (app name, output port) for derived policies.
  std::optional<std::pair<std::string, std::string>> provenance;
};

struct AppRegistration {
  std::string id;  // random 128-bit token, hex
  std::string document;
  std::string registered_at;
  int64_t registered_at_ms = 0;
};

/// Policy and registration persistence: one Turtle file per record under the
/// store directory plus a JSON manifest. Writes go through a temp file and
/// an atomic rename; readers never observe partial writes. Documents are
/// validated before anything touches disk.
///
/// Layout:
///   <dir>/manifest.json
///   <dir>/policies/<hash>-<tail>.ttl
///   <dir>/apps/<registration-id>.ttl
class PolicyStore {
 public:
  explicit PolicyStore(std::filesystem::path dir,
                       std::chrono::milliseconds registration_ttl =
                           std::chrono::hours(24));

  /// Validates that the document holds exactly one data policy set whose
  /// uri equals `uri`; overwrites atomically.
  PolicyRecord put_policy(
      const std::string& uri, const std::string& document,
      std::optional<std::pair<std::string, std::string>> provenance =
          std::nullopt);
  std::optional<PolicyRecord> get_policy(const std::string& uri) const;
  std::vector<PolicyRecord> list_policies() const;

  /// Validates that the document holds exactly one app policy.
  AppRegistration register_app(const std::string& document);
  /// Expired registrations read as absent.
  std::optional<AppRegistration> get_app(const std::string& id) const;

  const std::filesystem::path& directory() const { return dir_; }

 private:
  struct PolicyMeta {
    std::string file;
    std::string created_at;
    std::optional<std::pair<std::string, std::string>> provenance;
  };
  struct AppMeta {
    std::string file;
    std::string registered_at;
    int64_t registered_at_ms = 0;
  };

  void load();
  void save_manifest_locked() const;
  std::string read_document(const std::string& relative) const;

  std::filesystem::path dir_;
  std::chrono::milliseconds ttl_;
  mutable std::shared_mutex mu_;
  std::map<std::string, PolicyMeta> policies_;  // by uri
  std::map<std::string, AppMeta> apps_;         // by registration id
};

}  // namespace dtou::store
