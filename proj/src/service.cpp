#include "clusterseed/service.hpp"

#include <httplib.h>

#include "clusterseed/errors.hpp"
#include "clusterseed/explore.hpp"
#include "clusterseed/fingerprint.hpp"
#include "clusterseed/quotient.hpp"

namespace clusterseed {

namespace {

constexpr std::size_t kMaxNeighborhoodDepth = 6;

ServiceResponse error(int status, const std::string& message) { return {status, Json{{"error", message}}}; }

Json parse_body(const std::string& body) {
  try {
    return body.empty() ? Json::object() : Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("request body is not JSON: ") + e.what());
  }
}

Json session_json(const std::string& id, const Session& s) {
  Json j;
  j["id"] = id;
  j["seed"] = to_json(s.current());
  j["word"] = s.word().to_string();
  j["steps"] = s.history().size();
  return j;
}

}  // namespace

struct SessionService::ClassData {
  bool closed = false;
  std::size_t explored = 0;
  ExplorationReport report;
  Partition same_quiver, similar;
  std::size_t w_plus = 0, w = 0;
};

SessionService::SessionService(std::size_t class_budget) : class_budget_(class_budget) {}

std::shared_ptr<SessionService::Entry> SessionService::find(const std::string& id) {
  std::lock_guard<std::mutex> g(lock_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

template <class F>
ServiceResponse SessionService::with_session(const std::string& id, F&& f) {
  auto entry = find(id);
  if (!entry) return error(404, "unknown session '" + id + "'");
  std::lock_guard<std::mutex> g(entry->lock);
  try {
    return f(*entry);
  } catch (const FrozenVertex& e) {
    return error(409, e.what());
  } catch (const InvalidArgument& e) {
    return error(400, e.what());
  } catch (const ParseError& e) {
    return error(400, e.what());
  }
}

ServiceResponse SessionService::create(const std::string& body) {
  IceQuiver q;
  try {
    q = quiver_from_input(parse_body(body));
  } catch (const ParseError& e) {
    return error(400, e.what());
  } catch (const InvalidArgument& e) {
    return error(400, e.what());
  }
  if (q.size() == 0) return error(400, "quiver has no vertices");
  auto entry = std::make_shared<Entry>(q);
  std::string id;
  {
    std::lock_guard<std::mutex> g(lock_);
    id = "s" + std::to_string(next_id_++);
    sessions_[id] = entry;
  }
  std::lock_guard<std::mutex> g(entry->lock);
  return {201, session_json(id, entry->session)};
}

ServiceResponse SessionService::get(const std::string& id) {
  return with_session(id, [&](Entry& e) { return ServiceResponse{200, session_json(id, e.session)}; });
}

ServiceResponse SessionService::mutate(const std::string& id, const std::string& body) {
  return with_session(id, [&](Entry& e) {
    const Json j = parse_body(body);
    if (!j.contains("vertex") || !j["vertex"].is_number_integer()) return error(400, "expected {\"vertex\": k}");
    const auto k = j["vertex"].get<long long>();
    if (k < 1 || static_cast<std::size_t>(k) > e.session.current().size())
      return error(400, "vertex " + std::to_string(k) + " out of range");
    e.session.mutate(static_cast<std::size_t>(k - 1));
    return ServiceResponse{200, session_json(id, e.session)};
  });
}

ServiceResponse SessionService::permute(const std::string& id, const std::string& body) {
  return with_session(id, [&](Entry& e) {
    const Json j = parse_body(body);
    const std::size_t n = e.session.current().size();
    if (!j.contains("perm")) return error(400, "expected {\"perm\": \"(1 2)\"} or {\"perm\": [2, 1, ...]}");
    Permutation p;
    if (j["perm"].is_string()) {
      p = Permutation::parse_cycles(j["perm"].get<std::string>(), n);
    } else if (j["perm"].is_array()) {
      std::vector<int> img;
      for (const auto& x : j["perm"]) {
        if (!x.is_number_integer()) return error(400, "permutation images must be integers");
        img.push_back(x.get<int>() - 1);
      }
      p = Permutation(std::move(img));
    } else {
      return error(400, "permutation must be a cycle string or an image list");
    }
    if (p.size() != n) return error(400, "permutation must act on " + std::to_string(n) + " points");
    e.session.permute(p);
    return ServiceResponse{200, session_json(id, e.session)};
  });
}

ServiceResponse SessionService::undo(const std::string& id) {
  return with_session(id, [&](Entry& e) {
    const bool undone = e.session.undo();
    Json j = session_json(id, e.session);
    j["undone"] = undone;
    return ServiceResponse{200, j};
  });
}

ServiceResponse SessionService::word(const std::string& id) {
  return with_session(id, [&](Entry& e) {
    return ServiceResponse{200, Json{{"id", id}, {"word", e.session.word().to_string()}}};
  });
}

ServiceResponse SessionService::neighborhood(const std::string& id, const std::string& depth) {
  return with_session(id, [&](Entry& e) {
    std::size_t k = 1;
    if (!depth.empty()) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(depth, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != depth.size() || v < 0 || static_cast<std::size_t>(v) > kMaxNeighborhoodDepth)
        return error(400, "depth must be an integer between 0 and " + std::to_string(kMaxNeighborhoodDepth));
      k = static_cast<std::size_t>(v);
    }
    const Neighborhood nb = explore_neighborhood(e.session.current(), k);
    Json j;
    j["id"] = id;
    j["depth"] = k;
    j["graph"] = to_json(nb.graph);
    Json seeds = Json::array();
    for (const auto& s : nb.seeds) seeds.push_back(to_json(s));
    j["seeds"] = seeds;
    return ServiceResponse{200, j};
  });
}

ServiceResponse SessionService::classinfo(const std::string& id) {
  return with_session(id, [&](Entry& e) {
    if (!e.class_data) {
      auto data = std::make_shared<ClassData>();
      const ExplorationReport probe =
          explore_fingerprints(SeedFingerprint::of(e.session.initial()), class_budget_);
      data->explored = probe.size();
      if (probe.closed()) {
        data->report = explore_seeds(e.session.initial(), class_budget_);
        data->closed = data->report.closed();
      }
      if (data->closed) {
        data->same_quiver = partition(data->report, RelationKind::SameQuiver);
        data->similar = partition(data->report, RelationKind::SimilarQuiver);
        data->w_plus = compute_group(data->report, RelationKind::SameQuiver).order();
        data->w = compute_group(data->report, RelationKind::SimilarQuiver).order();
      }
      e.class_data = data;
    }
    const ClassData& d = *e.class_data;
    Json j;
    j["id"] = id;
    if (!d.closed) {
      j["status"] = "unknown";
      j["explored"] = d.explored;
      j["budget"] = class_budget_;
      return ServiceResponse{200, j};
    }
    const auto v = d.report.find_seed(e.session.current());
    if (!v) throw Error("current seed missing from its closed class");
    j["status"] = "closed";
    j["seeds"] = d.report.size();
    j["seed_index"] = *v;
    j["same_quiver"] = {{"classes", d.same_quiver.count()},
                        {"class", d.same_quiver.class_of[*v]},
                        {"group_order", d.w_plus},
                        {"quotient", to_json(quotient_graph(d.report, d.same_quiver))}};
    j["similar"] = {{"classes", d.similar.count()},
                    {"class", d.similar.class_of[*v]},
                    {"group_order", d.w},
                    {"quotient", to_json(quotient_graph(d.report, d.similar))}};
    return ServiceResponse{200, j};
  });
}

ServiceResponse SessionService::check(const std::string& id) {
  return with_session(id, [&](Entry& e) {
    return ServiceResponse{200, Json{{"id", id}, {"consistent", e.session.consistent()}}};
  });
}

void SessionService::mount(httplib::Server& server) {
  auto reply = [](httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Post("/session", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, create(req.body));
  });
  server.Get(R"(/session/([^/]+))", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, get(req.matches[1]));
  });
  server.Post(R"(/session/([^/]+)/mutate)", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, mutate(req.matches[1], req.body));
  });
  server.Post(R"(/session/([^/]+)/permute)", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, permute(req.matches[1], req.body));
  });
  server.Post(R"(/session/([^/]+)/undo)", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, undo(req.matches[1]));
  });
  server.Get(R"(/session/([^/]+)/word)", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, word(req.matches[1]));
  });
  server.Get(R"(/session/([^/]+)/neighborhood)", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, neighborhood(req.matches[1], req.has_param("depth") ? req.get_param_value("depth") : ""));
  });
  server.Get(R"(/session/([^/]+)/classinfo)", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, classinfo(req.matches[1]));
  });
  server.Get(R"(/session/([^/]+)/check)", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, check(req.matches[1]));
  });
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(Json{{"error", what}}.dump(), "application/json");
  });
}

bool serve(const std::string& host, int port, std::size_t class_budget) {
  SessionService service(class_budget);
  httplib::Server server;
  service.mount(server);
  return server.listen(host, port);
}

}  // namespace clusterseed
