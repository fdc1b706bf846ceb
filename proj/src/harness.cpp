#include "speval/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "speval/prompts.hpp"
#include "speval/rng.hpp"

namespace speval::harness {

using nlohmann::json;
namespace fs = std::filesystem;

std::string_view setting_name(Setting s) {
  switch (s) {
    case Setting::CoT: return "cot";
    case Setting::NoViz: return "noviz";
    case Setting::VoT: return "vot";
    case Setting::VoTAscii: return "vot_ascii";
  }
  return "cot";
}

std::optional<Setting> setting_from_name(std::string_view name) {
  for (Setting s : kAllSettings)
    if (name == setting_name(s)) return s;
  return std::nullopt;
}

std::string_view setting_suffix(Setting s) {
  switch (s) {
    case Setting::CoT: return "Let's think step by step.";
    case Setting::NoViz: return "Don't use visualization. Let's think step by step.";
    case Setting::VoT: return "Visualize the state after each reasoning step.";
    case Setting::VoTAscii:
      return "Use ascii-art to visualize the state after each reasoning step.";
  }
  return "";
}

std::vector<Message> build_prompt(const data::QAItem& item, Setting s, const RenderPalette& p) {
  std::string instruction = prompts::task_instruction(item.task, p);
  std::string content;
  if (!instruction.empty()) content = instruction + "\n\n";
  content += item.input_text;
  content += "\n\n";
  content += setting_suffix(s);
  return {{"user", std::move(content)}};
}

json chat_payload(const ProviderConfig& cfg, std::span<const Message> messages) {
  json payload;
  payload["model"] = cfg.model;
  payload["temperature"] = cfg.temperature;
  payload["top_p"] = cfg.top_p;
  json msgs = json::array();
  for (const Message& m : messages) msgs.push_back({{"role", m.role}, {"content", m.content}});
  payload["messages"] = std::move(msgs);
  return payload;
}

std::string payload_hash(const json& payload) {
  std::uint64_t h = Rng::fnv1a(payload.dump());
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CompletionResult MockProvider::complete(const json& payload) {
  ++calls_;
  if (transient_failures_ > 0) {
    --transient_failures_;
    return {false, "", 0, false, "mock transient failure"};
  }
  return {true, responder_(payload), 0, false, ""};
}

CompletionResult HttpProvider::complete(const json& payload) {
  const char* key = std::getenv(cfg_.credential_env.c_str());
  if (!key || !*key)
    return {false, "", 0, true, "credential env var " + cfg_.credential_env + " not set"};

  httplib::Client client(cfg_.endpoint);
  client.set_connection_timeout(cfg_.timeout_seconds, 0);
  client.set_read_timeout(cfg_.timeout_seconds, 0);
  httplib::Headers headers = {{"Authorization", std::string("Bearer ") + key}};
  auto res = client.Post(cfg_.path, headers, payload.dump(), "application/json");
  if (!res) return {false, "", 0, false, "transport error"};
  if (res->status == 401 || res->status == 403)
    return {false, "", 0, true, "authentication failed (" + std::to_string(res->status) + ")"};
  if (res->status != 200)
    return {false, "", 0, false, "http status " + std::to_string(res->status)};
  try {
    json body = json::parse(res->body);
    return {true, body.at("choices").at(0).at("message").at("content").get<std::string>(), 0,
            false, ""};
  } catch (const std::exception& e) {
    return {false, "", 0, false, std::string("malformed response: ") + e.what()};
  }
}

namespace {

CompletionResult complete_with_retries(Provider& provider, const json& payload,
                                       int max_retries) {
  CompletionResult last;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    if (attempt > 0)
      std::this_thread::sleep_for(std::chrono::milliseconds(50) * (1 << (attempt - 1)));
    last = provider.complete(payload);
    last.retries = attempt;
    if (last.ok || last.fatal) return last;
  }
  return last;
}

json record_to_json(const RunRecord& r) {
  return json{{"id", r.id},
              {"task", r.task},
              {"setting", r.setting},
              {"payload_hash", r.payload_hash},
              {"transcript", r.transcript},
              {"latency_ms", r.latency_ms},
              {"retries", r.retries},
              {"cache_hit", r.cache_hit},
              {"failed", r.failed}};
}

RunRecord record_from_json(const json& j) {
  RunRecord r;
  r.id = j.at("id").get<std::string>();
  r.task = j.at("task").get<std::string>();
  r.setting = j.at("setting").get<std::string>();
  r.payload_hash = j.value("payload_hash", "");
  r.transcript = j.value("transcript", "");
  r.latency_ms = j.value("latency_ms", 0.0);
  r.retries = j.value("retries", 0);
  r.cache_hit = j.value("cache_hit", false);
  r.failed = j.value("failed", false);
  return r;
}

}  // namespace

std::vector<RunRecord> load_run_records(const fs::path& run_dir) {
  std::vector<RunRecord> out;
  fs::path runs = run_dir / "runs";
  if (!fs::exists(runs)) return out;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(runs))
    if (entry.path().extension() == ".jsonl") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    std::ifstream in(file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      out.push_back(record_from_json(json::parse(line)));
    }
  }
  return out;
}

RunSummary run_suite(std::span<const data::QAItem> items, std::span<const Setting> settings,
                     Provider& provider, const ProviderConfig& cfg, const RunOptions& opts) {
  fs::create_directories(opts.run_dir / "runs");
  fs::create_directories(opts.run_dir / "scores");
  fs::path cache_dir = opts.run_dir / "cache";
  if (opts.use_cache) fs::create_directories(cache_dir);

  // ids already persisted (and not failed) are skipped for resumability
  std::set<std::pair<std::string, std::string>> done;
  for (const RunRecord& r : load_run_records(opts.run_dir))
    if (!r.failed) done.insert({r.id, r.setting});

  struct Job {
    const data::QAItem* item;
    Setting setting;
  };
  std::vector<Job> jobs;
  for (Setting s : settings)
    for (const data::QAItem& item : items) jobs.push_back({&item, s});

  RunSummary summary;
  summary.total = static_cast<int>(jobs.size());

  std::mutex io_mutex;
  std::atomic<size_t> next{0};

  auto worker = [&] {
    while (true) {
      size_t n = next.fetch_add(1);
      if (n >= jobs.size()) return;
      const Job& job = jobs[n];
      std::string sname(setting_name(job.setting));
      {
        std::lock_guard lock(io_mutex);
        if (done.count({job.item->id, sname})) {
          ++summary.skipped;
          continue;
        }
      }

      json payload = chat_payload(cfg, build_prompt(*job.item, job.setting, opts.palette));
      RunRecord rec;
      rec.id = job.item->id;
      rec.task = job.item->task;
      rec.setting = sname;
      rec.payload_hash = payload_hash(payload);

      fs::path cache_file = cache_dir / (rec.payload_hash + ".txt");
      auto t0 = std::chrono::steady_clock::now();
      bool served = false;
      if (opts.use_cache && fs::exists(cache_file)) {
        std::ifstream in(cache_file, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        rec.transcript = ss.str();
        rec.cache_hit = true;
        served = true;
      }
      if (!served) {
        CompletionResult res = complete_with_retries(provider, payload, cfg.max_retries);
        rec.retries = res.retries;
        if (res.ok) {
          rec.transcript = res.text;
          if (opts.use_cache) {
            std::ofstream out(cache_file, std::ios::binary);
            out << res.text;
          }
        } else {
          rec.failed = true;
          rec.transcript = res.error;
        }
      }
      rec.latency_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();

      std::lock_guard lock(io_mutex);
      fs::path file = opts.run_dir / "runs" / (rec.task + "." + sname + ".jsonl");
      std::ofstream out(file, std::ios::app);
      out << record_to_json(rec).dump() << '\n';
      if (rec.failed) ++summary.failed;
      else ++summary.completed;
      if (rec.cache_hit) ++summary.cache_hits;
    }
  };

  int workers = std::max(1, opts.workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  json manifest;
  manifest["model"] = cfg.model;
  manifest["palette"] = opts.palette.id;
  manifest["total"] = summary.total;
  manifest["completed"] = summary.completed;
  manifest["skipped"] = summary.skipped;
  manifest["failed"] = summary.failed;
  manifest["cache_hits"] = summary.cache_hits;
  json per;
  std::map<std::string, int> counts;
  for (const RunRecord& r : load_run_records(opts.run_dir)) ++counts[r.task + "." + r.setting];
  for (const auto& [key, count] : counts) per[key] = count;
  manifest["records"] = per;
  std::ofstream mout(opts.run_dir / "manifest.json");
  mout << manifest.dump(2) << '\n';

  return summary;
}

int reasoning_steps(const data::QAItem& item) {
  if (item.task == "route_planning") return item.meta.at("k").get<int>();
  if (item.task == "next_step")
    return static_cast<int>(item.meta.at("given_instructions").size()) + 1;
  if (item.task == "visual_tiling") return item.meta.at("mask_count").get<int>();
  return std::max(1, item.meta.value("steps", 1));
}

namespace {

// Gold map with the walked path prefix marked; start/destination keep their
// dedicated glyphs.
std::string render_nav_state(const nav::NavMapRecord& rec, int segments,
                             const RenderPalette& p) {
  int cells = 0;
  for (int s = 0; s < segments; ++s) cells += rec.plan.distances[s];
  std::string base = render_grid(rec.map, p);
  // replace prefix road cells with the '*' marker
  std::vector<std::string> rows;
  {
    std::stringstream ss(base);
    std::string line;
    while (std::getline(ss, line)) rows.push_back(line);
  }
  std::vector<std::vector<std::string>> grid;
  for (auto& row : rows) grid.push_back(utf8_codepoints(row));
  for (int i = 1; i <= cells; ++i) {
    Coord at = rec.path[i];
    if (at == rec.map.dest) continue;
    grid[at.row][at.col] = "*";
  }
  std::string out;
  for (size_t r = 0; r < grid.size(); ++r) {
    if (r) out += '\n';
    for (const auto& cp : grid[r]) out += cp;
  }
  return out;
}

std::string oracle_response(const data::QAItem& item, const RenderPalette& p) {
  int steps = reasoning_steps(item);
  std::string out;
  std::string answer;

  if (item.task == "route_planning" || item.task == "next_step") {
    auto parsed = parse_grid(item.meta.at("map_text").get<std::string>(), p);
    nav::NavMapRecord rec = nav::reconstruct_record(parsed.map);
    for (int s = 1; s <= steps; ++s) {
      out += "Step " + std::to_string(s) + ":\n";
      out += render_nav_state(rec, std::min(s, rec.k), p) + "\n";
    }
    if (item.task == "route_planning") {
      std::string words;
      for (Direction d : nav::expand_plan(rec.plan)) {
        if (!words.empty()) words += ' ';
        words += direction_name(d);
      }
      answer = words;
    } else {
      answer = item.gold;
    }
  } else if (item.task == "visual_tiling") {
    // final state: the gold placement filled into the masked rectangle
    std::string rect = item.meta.at("rect_text").get<std::string>();
    std::vector<std::vector<std::string>> grid;
    {
      std::stringstream ss(rect);
      std::string line;
      while (std::getline(ss, line)) grid.push_back(utf8_codepoints(line));
    }
    auto query = tiling::piece_from_name(item.meta.at("query_piece").get<std::string>());
    std::string glyph = p.piece[static_cast<int>(query.value_or(tiling::PieceType::I))];
    for (const auto& cell : item.meta.at("gold_cells"))
      grid[cell.at(0).get<int>()][cell.at(1).get<int>()] = glyph;
    std::string filled;
    for (size_t r = 0; r < grid.size(); ++r) {
      if (r) filled += '\n';
      for (const auto& cp : grid[r]) filled += cp;
    }
    for (int s = 1; s <= steps; ++s) {
      out += "Step " + std::to_string(s) + ":\n";
      out += (s == steps ? filled : rect) + "\n";
    }
    answer = item.gold;
  } else {
    for (int s = 1; s <= steps; ++s) {
      out += "Step " + std::to_string(s) + ":\n";
      out += "* " + std::string(". .") + "\n. . .\n. . .\n";
    }
    answer = item.gold;
  }
  out += "The answer is " + answer + ".";
  return out;
}

}  // namespace

MockProvider::Responder make_gold_oracle(std::span<const data::QAItem> items,
                                         std::span<const Setting> settings,
                                         const ProviderConfig& cfg, const RenderPalette& p) {
  auto table = std::make_shared<std::unordered_map<std::string, std::string>>();
  for (const data::QAItem& item : items) {
    std::string response = oracle_response(item, p);
    for (Setting s : settings) {
      json payload = chat_payload(cfg, build_prompt(item, s, p));
      (*table)[payload_hash(payload)] = response;
    }
  }
  return [table](const json& payload) -> std::string {
    auto it = table->find(payload_hash(payload));
    return it == table->end() ? std::string("The answer is unknown.") : it->second;
  };
}

}  // namespace speval::harness
