#pragma once

#include <memory>
#include <string>

#include "ontoforge/ontoforge.h"

namespace ontoforge::service {

struct ServerOptions {
  std::string data_dir = "ontoforge-data";
  std::string static_dir;  // served under "/" when it exists
  std::string host = "127.0.0.1";
};

/// HTTP status for a C API status code.
int http_status(of_status status);

/// JSON API over one corpus. Sessions are persisted in data_dir and
/// reopened on demand, so a restarted server continues where it stopped.
class ApiServer {
 public:
  /// Takes ownership of the corpus handle.
  ApiServer(of_corpus* corpus, ServerOptions options);
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int bind(int port);
  /// Serves until stop(); call after bind().
  bool run();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ontoforge::service
