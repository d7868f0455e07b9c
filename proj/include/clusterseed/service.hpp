#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "clusterseed/io.hpp"
#include "clusterseed/session.hpp"

namespace httplib {
class Server;
}

namespace clusterseed {

struct ServiceResponse {
  int status = 200;
  Json body;
};

/// The session JSON API, independent of the HTTP transport. Vertices and
/// permutations in requests are one-based. Errors come back as
/// {"error": message} with status 400 (bad input), 404 (unknown session) or
/// 409 (mutation or permutation touching a frozen vertex).
class SessionService {
 public:
  /// `class_budget` bounds the exploration behind classinfo.
  explicit SessionService(std::size_t class_budget = 5000);

  ServiceResponse create(const std::string& body);
  ServiceResponse get(const std::string& id);
  ServiceResponse mutate(const std::string& id, const std::string& body);
  ServiceResponse permute(const std::string& id, const std::string& body);
  ServiceResponse undo(const std::string& id);
  ServiceResponse word(const std::string& id);
  ServiceResponse neighborhood(const std::string& id, const std::string& depth);
  ServiceResponse classinfo(const std::string& id);
  /// Replays the session history and compares with the current seed.
  ServiceResponse check(const std::string& id);

  /// Registers every endpoint on `server`.
  void mount(httplib::Server& server);

 private:
  struct ClassData;
  struct Entry {
    std::mutex lock;
    Session session;
    std::shared_ptr<const ClassData> class_data;  // computed on first use
    explicit Entry(const IceQuiver& q) : session(q) {}
  };
  std::shared_ptr<Entry> find(const std::string& id);
  template <class F>
  ServiceResponse with_session(const std::string& id, F&& f);

  std::size_t class_budget_;
  std::mutex lock_;
  std::size_t next_id_ = 1;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

/// Runs the HTTP service until the process is stopped. Returns false if the
/// port could not be bound.
bool serve(const std::string& host, int port, std::size_t class_budget = 5000);

}  // namespace clusterseed
