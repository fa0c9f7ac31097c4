#pragma once

#include "cogail/service/session.hpp"

#include <filesystem>
#include <memory>
#include <string>

namespace cogail::service {

struct ServerConfig {
  std::string address = "127.0.0.1";
  unsigned short port = 8080;  // 0 picks a free port
  std::filesystem::path static_dir;
  std::filesystem::path record_dir;
  int rounds = kDefaultRounds;
  std::uint64_t seed = 0;
  int tick_hz = kTickHz;
  // State frames queued per client before new ones are dropped.
  std::size_t max_pending_frames = 8;
};

struct ServerStats {
  long ticks = 0;
  double max_tick_ms = 0.0;
  double mean_tick_ms = 0.0;
  long dropped_frames = 0;
};

// WebSocket game service plus static file serving on one port. Any HTTP
// request carrying a WebSocket upgrade joins the session; other GETs are
// served from static_dir.
class Server {
 public:
  Server(ServerConfig cfg, env::Layout layout, std::shared_ptr<const core::Model> policy);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  void start();
  void stop();
  // Blocks until stop() is called from another thread or a signal arrives.
  void wait();

  unsigned short port() const;
  ServerStats stats() const;
  nlohmann::json report() const;
  demos::DemoDataset recordings() const;

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

// Content type for a file extension such as ".js".
std::string mime_type(const std::filesystem::path& path);

}  // namespace cogail::service
