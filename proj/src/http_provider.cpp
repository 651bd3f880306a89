#include "wnsynth/http_provider.hpp"

#include <httplib.h>
#include <json.hpp>

#include <thread>

#include "wnsynth/error.hpp"

namespace wnsynth {

HttpTranslationProvider::HttpTranslationProvider(std::string name, HttpProviderOptions options)
    : name_(std::move(name)), options_(std::move(options)) {
  if (options_.max_in_flight < 1) options_.max_in_flight = 1;
}

int HttpTranslationProvider::peak_in_flight() const {
  std::lock_guard lock(mutex_);
  return peak_in_flight_;
}

void HttpTranslationProvider::acquire_slot() {
  std::unique_lock lock(mutex_);
  slot_free_.wait(lock, [&] { return in_flight_ < options_.max_in_flight; });
  ++in_flight_;
  peak_in_flight_ = std::max(peak_in_flight_, in_flight_);
}

void HttpTranslationProvider::release_slot() {
  {
    std::lock_guard lock(mutex_);
    --in_flight_;
  }
  slot_free_.notify_one();
}

void HttpTranslationProvider::wait_for_rate_limit() {
  if (options_.qps <= 0.0) return;
  auto interval = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(1.0 / options_.qps));
  std::chrono::steady_clock::time_point slot;
  {
    std::lock_guard lock(mutex_);
    auto now = std::chrono::steady_clock::now();
    slot = std::max(now, next_request_);
    next_request_ = slot + interval;
  }
  std::this_thread::sleep_until(slot);
}

std::vector<std::string> HttpTranslationProvider::do_translate(const std::string& word,
                                                               const LangPair& pair) {
  struct Slot {
    HttpTranslationProvider& self;
    explicit Slot(HttpTranslationProvider& s) : self(s) { self.acquire_slot(); }
    ~Slot() { self.release_slot(); }
  } slot(*this);
  wait_for_rate_limit();

  httplib::Client client(options_.base_url);
  client.set_connection_timeout(options_.timeout_seconds, 0);
  client.set_read_timeout(options_.timeout_seconds, 0);

  nlohmann::json body = {{"text", word}, {"from", pair.src}, {"to", pair.dst}};
  httplib::Headers headers;
  if (!options_.api_key.empty()) headers.emplace("Authorization", "Bearer " + options_.api_key);

  auto res = client.Post(options_.path, headers, body.dump(), "application/json");
  if (!res)
    throw ProviderError(name_ + ": request failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw ProviderError(name_ + ": HTTP " + std::to_string(res->status));

  std::vector<std::string> out;
  try {
    auto reply = nlohmann::json::parse(res->body);
    for (const auto& t : reply.at("translations")) {
      auto parts = split_alternatives(t.get<std::string>());
      out.insert(out.end(), parts.begin(), parts.end());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ProviderError(name_ + ": malformed response: " + e.what());
  }
  return out;
}

}  // namespace wnsynth
