#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "speval/jsonl.hpp"

namespace speval::harness {

enum class Setting { CoT, NoViz, VoT, VoTAscii };
constexpr std::array<Setting, 4> kAllSettings = {Setting::CoT, Setting::NoViz, Setting::VoT,
                                                 Setting::VoTAscii};

std::string_view setting_name(Setting s);  // cot | noviz | vot | vot_ascii
std::optional<Setting> setting_from_name(std::string_view name);
std::string_view setting_suffix(Setting s);  // the exact prompt sentence

struct Message {
  std::string role;
  std::string content;
};

// Zero-shot: task instruction + rendered inputs + setting suffix, one user
// message, byte-stable for fixed inputs.
std::vector<Message> build_prompt(const data::QAItem& item, Setting s, const RenderPalette& p);

struct ProviderConfig {
  std::string endpoint = "https://api.openai.com";
  std::string path = "/v1/chat/completions";
  std::string model = "gpt-4";
  double temperature = 0.0;
  double top_p = 1.0;
  int max_retries = 3;
  int timeout_seconds = 120;
  std::string credential_env = "OPENAI_API_KEY";
  bool nonstandard = false;  // must be set to move temperature/top_p off 0/1
};

nlohmann::json chat_payload(const ProviderConfig& cfg, std::span<const Message> messages);
std::string payload_hash(const nlohmann::json& payload);  // stable hex digest

struct CompletionResult {
  bool ok = false;
  std::string text;
  int retries = 0;
  bool fatal = false;  // configuration/auth failure: abort the run
  std::string error;
};

class Provider {
 public:
  virtual ~Provider() = default;
  virtual CompletionResult complete(const nlohmann::json& payload) = 0;
};

// In-process provider implementing the same payload contract. Responses come
// from a responder callback; the first `transient_failures` calls fail, which
// exercises the retry path.
class MockProvider : public Provider {
 public:
  using Responder = std::function<std::string(const nlohmann::json& payload)>;
  explicit MockProvider(Responder responder, int transient_failures = 0)
      : responder_(std::move(responder)), transient_failures_(transient_failures) {}
  CompletionResult complete(const nlohmann::json& payload) override;
  int calls() const { return calls_; }

 private:
  Responder responder_;
  int transient_failures_ = 0;
  int calls_ = 0;
};

// OpenAI-compatible chat-completions client over HTTPS with exponential
// backoff on transient failures. The key is read from cfg.credential_env.
class HttpProvider : public Provider {
 public:
  explicit HttpProvider(ProviderConfig cfg) : cfg_(std::move(cfg)) {}
  CompletionResult complete(const nlohmann::json& payload) override;

 private:
  ProviderConfig cfg_;
};

struct RunRecord {
  std::string id;
  std::string task;
  std::string setting;
  std::string payload_hash;
  std::string transcript;
  double latency_ms = 0.0;
  int retries = 0;
  bool cache_hit = false;
  bool failed = false;
};

struct RunOptions {
  std::filesystem::path run_dir;
  int workers = 1;
  bool use_cache = true;
  RenderPalette palette;
};

struct RunSummary {
  int total = 0;
  int completed = 0;
  int skipped = 0;  // already persisted from an earlier run
  int failed = 0;
  int cache_hits = 0;
};

// For each (item, setting): build, complete, persist. Transcripts append to
// runs/<task>.<setting>.jsonl; reruns skip persisted records; partial
// failures never abort the suite. A manifest.json summarizes counts.
RunSummary run_suite(std::span<const data::QAItem> items, std::span<const Setting> settings,
                     Provider& provider, const ProviderConfig& cfg, const RunOptions& opts);

std::vector<RunRecord> load_run_records(const std::filesystem::path& run_dir);

// Perfect-oracle responder: answers every prompt with l_s interleaved
// state visualizations followed by the gold answer. Keyed by payload hash.
MockProvider::Responder make_gold_oracle(std::span<const data::QAItem> items,
                                         std::span<const Setting> settings,
                                         const ProviderConfig& cfg, const RenderPalette& p);

// The task-defined reasoning-step count l_s for an item.
int reasoning_steps(const data::QAItem& item);

}  // namespace speval::harness
