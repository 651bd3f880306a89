#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wnsynth/assembly.hpp"

namespace httplib {
class Server;
}

namespace wnsynth {

struct RatingRecord {
  OffsetPos id;
  std::string target_lang;
  std::vector<std::string> words;
  int score = 0;
  std::optional<std::string> comment;
  std::string rater;
  std::string timestamp;  // UTC, ISO 8601

  friend bool operator==(const RatingRecord&, const RatingRecord&) = default;
};

std::string to_json_line(const RatingRecord& r);
/// Throws ParseError on malformed records and ValidationError on bad scores.
RatingRecord rating_from_json_line(std::string_view line);

/// Append-only JSON-lines ratings store. Appends are serialized; records()
/// may be called concurrently.
class RatingLog {
public:
  /// Replays an existing log, then opens it for append. Throws Error when the
  /// path cannot be read or written.
  explicit RatingLog(std::filesystem::path path);

  void append(const RatingRecord& record);
  std::vector<RatingRecord> records() const;
  std::vector<Rating> ratings() const;

private:
  std::filesystem::path path_;
  std::ofstream out_;
  mutable std::mutex mutex_;
  std::vector<RatingRecord> records_;
};

/// JSON-over-HTTP review API over one exported wordnet.
///
///   GET  /api/health
///   GET  /api/synsets?offset=&limit=
///   GET  /api/synsets/{offset-pos}
///   POST /api/ratings   {"offsetPos", "score", "rater", "comment"?}
///   GET  /api/stats
class ReviewService {
public:
  ReviewService(ExportedWordnet data, std::shared_ptr<RatingLog> log);
  ~ReviewService();

  ReviewService(const ReviewService&) = delete;
  ReviewService& operator=(const ReviewService&) = delete;

  /// Binds the listening socket; port 0 picks a free port. Returns the bound
  /// port. Throws Error when binding fails.
  int bind(const std::string& host, int port);
  /// Serves until stop(). Requires a prior bind().
  void run();
  void stop();

private:
  void install_routes();

  ExportedWordnet data_;
  std::shared_ptr<RatingLog> log_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace wnsynth
