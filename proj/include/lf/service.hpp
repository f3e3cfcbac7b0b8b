#pragma once

#include <memory>
#include <string>

namespace lf {

// JSON/HTTP session service. Every mutating endpoint answers with the full
// post-state snapshot.
class Service {
 public:
  Service();
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  void run();  // blocks until stop()
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lf
