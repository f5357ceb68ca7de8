// SPDX-License-Identifier: Apache-2.0
#include "dtou/store/policy_store.hpp"

#include <cctype>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "dtou/errors.hpp"
#include "dtou/model/extract.hpp"
#include "dtou/rdf/turtle.hpp"

namespace dtou::store {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string now_iso8601() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::string fnv1a_hex(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string policy_filename(const std::string& uri) {
  std::string tail;
  for (char c : uri) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.')
      tail += c;
    if (tail.size() >= 32) break;
  }
  return fnv1a_hex(uri) + (tail.empty() ? "" : "-" + tail) + ".ttl";
}

std::string random_token() {
  std::random_device rd;
  std::mt19937_64 gen((static_cast<uint64_t>(rd()) << 32) ^ rd());
  char buf[33];
  snprintf(buf, sizeof(buf), "%016llx%016llx",
           static_cast<unsigned long long>(gen()),
           static_cast<unsigned long long>(gen()));
  return buf;
}

void atomic_write(const fs::path& target, const std::string& content) {
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(now_ms()) + "-" + random_token().substr(0, 8);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StoreError("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw StoreError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw StoreError("atomic rename to " + target.string() + " failed");
  }
}

}  // namespace

PolicyStore::PolicyStore(fs::path dir, std::chrono::milliseconds ttl)
    : dir_(std::move(dir)), ttl_(ttl) {
  fs::create_directories(dir_ / "policies");
  fs::create_directories(dir_ / "apps");
  load();
}

void PolicyStore::load() {
  fs::path manifest = dir_ / "manifest.json";
  if (!fs::exists(manifest)) return;
  std::ifstream in(manifest);
  json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded())
    throw StoreError("corrupt manifest " + manifest.string());
  for (const auto& p : doc.value("policies", json::array())) {
    PolicyMeta meta;
    meta.file = p.at("file").get<std::string>();
    meta.created_at = p.value("created_at", "");
    if (p.contains("provenance")) {
      meta.provenance = {p["provenance"].value("app", ""),
                         p["provenance"].value("port", "")};
    }
    policies_[p.at("uri").get<std::string>()] = std::move(meta);
  }
  for (const auto& a : doc.value("registrations", json::array())) {
    AppMeta meta;
    meta.file = a.at("file").get<std::string>();
    meta.registered_at = a.value("registered_at", "");
    meta.registered_at_ms = a.value("registered_at_ms", int64_t{0});
    apps_[a.at("id").get<std::string>()] = std::move(meta);
  }
}

void PolicyStore::save_manifest_locked() const {
  json doc;
  doc["version"] = 1;
  doc["policies"] = json::array();
  for (const auto& [uri, meta] : policies_) {
    json p{{"uri", uri}, {"file", meta.file}, {"created_at", meta.created_at}};
    if (meta.provenance)
      p["provenance"] = {{"app", meta.provenance->first},
                         {"port", meta.provenance->second}};
    doc["policies"].push_back(std::move(p));
  }
  doc["registrations"] = json::array();
  for (const auto& [id, meta] : apps_) {
    doc["registrations"].push_back({{"id", id},
                                    {"file", meta.file},
                                    {"registered_at", meta.registered_at},
                                    {"registered_at_ms", meta.registered_at_ms}});
  }
  atomic_write(dir_ / "manifest.json", doc.dump(2) + "\n");
}

std::string PolicyStore::read_document(const std::string& relative) const {
  std::ifstream in(dir_ / relative, std::ios::binary);
  if (!in) throw StoreError("cannot read " + (dir_ / relative).string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolicyRecord PolicyStore::put_policy(
    const std::string& uri, const std::string& document,
    std::optional<std::pair<std::string, std::string>> provenance) {
  // Validate before anything is persisted.
  auto graph = rdf::parse_turtle(document);
  auto sets = model::extract_data_policies(graph);
  if (sets.size() != 1)
    throw ModelError("policy document must hold exactly one data policy set, found " +
                     std::to_string(sets.size()));
  if (sets.front().uri != uri)
    throw ModelError("document governs <" + sets.front().uri +
                     "> but was stored for <" + uri + ">");

  PolicyRecord rec;
  rec.data_uri = uri;
  rec.document = document;
  rec.created_at = now_iso8601();
  rec.provenance = provenance;

  std::unique_lock lock(mu_);
  PolicyMeta meta;
  meta.file = "policies/" + policy_filename(uri);
  meta.created_at = rec.created_at;
  meta.provenance = provenance;
  atomic_write(dir_ / meta.file, document);
  policies_[uri] = std::move(meta);
  save_manifest_locked();
  return rec;
}

std::optional<PolicyRecord> PolicyStore::get_policy(
    const std::string& uri) const {
  std::shared_lock lock(mu_);
  auto it = policies_.find(uri);
  if (it == policies_.end()) return std::nullopt;
  PolicyRecord rec;
  rec.data_uri = uri;
  rec.document = read_document(it->second.file);
  rec.created_at = it->second.created_at;
  rec.provenance = it->second.provenance;
  return rec;
}

std::vector<PolicyRecord> PolicyStore::list_policies() const {
  std::shared_lock lock(mu_);
  std::vector<PolicyRecord> out;
  for (const auto& [uri, meta] : policies_) {
    PolicyRecord rec;
    rec.data_uri = uri;
    rec.document = read_document(meta.file);
    rec.created_at = meta.created_at;
    rec.provenance = meta.provenance;
    out.push_back(std::move(rec));
  }
  return out;
}

AppRegistration PolicyStore::register_app(const std::string& document) {
  auto graph = rdf::parse_turtle(document);
  (void)model::extract_app_policy(graph);  // throws on structural problems

  AppRegistration reg;
  reg.id = random_token();
  reg.document = document;
  reg.registered_at = now_iso8601();
  reg.registered_at_ms = now_ms();

  std::unique_lock lock(mu_);
  AppMeta meta;
  meta.file = "apps/" + reg.id + ".ttl";
  meta.registered_at = reg.registered_at;
  meta.registered_at_ms = reg.registered_at_ms;
  atomic_write(dir_ / meta.file, document);
  apps_[reg.id] = std::move(meta);
  save_manifest_locked();
  return reg;
}

std::optional<AppRegistration> PolicyStore::get_app(
    const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = apps_.find(id);
  if (it == apps_.end()) return std::nullopt;
  if (now_ms() - it->second.registered_at_ms > ttl_.count())
    return std::nullopt;  // temporary record expired
  AppRegistration reg;
  reg.id = id;
  reg.document = read_document(it->second.file);
  reg.registered_at = it->second.registered_at;
  reg.registered_at_ms = it->second.registered_at_ms;
  return reg;
}

}  // namespace dtou::store
