#pragma once

#include <chrono>
#include <condition_variable>
#include <mutex>
#include <set>
#include <string>

#include "wnsynth/translation.hpp"

namespace wnsynth {

struct HttpProviderOptions {
  /// Base URL, e.g. "https://mt.example.org" or "http://127.0.0.1:8080".
  std::string base_url;
  std::string path = "/translate";
  std::string api_key;
  /// Requests per second; 0 disables rate limiting.
  double qps = 0.0;
  int max_in_flight = 4;
  int timeout_seconds = 10;
  std::set<LangPair> pairs;
};

/// Live machine-translation adapter.
///
/// Request:  POST <base_url><path>, `Authorization: Bearer <api_key>`,
///           body {"text": "<word>", "from": "<src>", "to": "<dst>"}
/// Response: 200 with {"translations": ["...", ...]}; each string may list
///           comma-separated alternatives.
///
/// Connection failures and non-200 statuses raise ProviderError.
class HttpTranslationProvider final : public TranslationProvider {
public:
  HttpTranslationProvider(std::string name, HttpProviderOptions options);

  const std::string& name() const noexcept override { return name_; }
  bool supports(const LangPair& pair) const override { return options_.pairs.count(pair) != 0; }

  int peak_in_flight() const;

protected:
  std::vector<std::string> do_translate(const std::string& word, const LangPair& pair) override;

private:
  void acquire_slot();
  void release_slot();
  void wait_for_rate_limit();

  std::string name_;
  HttpProviderOptions options_;

  mutable std::mutex mutex_;
  std::condition_variable slot_free_;
  int in_flight_ = 0;
  int peak_in_flight_ = 0;
  std::chrono::steady_clock::time_point next_request_{};
};

}  // namespace wnsynth
