#ifndef COXMUT_TOOLS_SERVICE_HPP
#define COXMUT_TOOLS_SERVICE_HPP

// In-memory session service behind the JSON HTTP API.
//
//   POST /api/sessions                  diagram JSON -> session state (201)
//   POST /api/sessions/{id}/mutate      {"k": K}, 1-based
//   POST /api/sessions/{id}/undo
//   GET  /api/sessions/{id}             {matrix, diagram, history}
//   GET  /api/sessions/{id}/analysis    report, 202 + poll URL while running
//   GET  /api/sessions/{id}/presentation  grammar text
//
// Every session is guarded by its own mutex; analyses run on worker threads
// and are cached by canonical key and vertex labeling.

#include "analysis.hpp"

#include <httplib.h>

#include <atomic>
#include <chrono>
#include <fstream>
#include <future>
#include <map>
#include <memory>
#include <mutex>

namespace coxmut::tools {

class Service {
public:
    explicit Service(Caps caps = {}, std::string dump_path = {}) : caps_(caps), dump_path_(std::move(dump_path)) {}

    Outcome create(const std::string& body)
    {
        Input in;
        try {
            in = Input::from_json(parse_json_text(body));
        } catch (const InvalidInput& e) {
            return error(400, e.what());
        } catch (const ParseError& e) {
            return error(400, e.what());
        }
        auto s = std::make_shared<Session>();
        s->nodes.push_back({std::nullopt, std::nullopt, in.matrix});
        s->custom = std::move(in.custom);
        {
            std::lock_guard lock(sessions_mu_);
            s->id = std::to_string(++next_id_);
            sessions_[s->id] = s;
        }
        Outcome out{201, state(*s)};
        dump();
        return out;
    }

    Outcome get(const std::string& id)
    {
        auto s = find(id);
        if (!s) return not_found(id);
        return {200, state(*s)};
    }

    Outcome mutate(const std::string& id, const std::string& body)
    {
        auto s = find(id);
        if (!s) return not_found(id);
        std::int64_t k = 0;
        try {
            const Json j = parse_json_text(body);
            if (!j.is_object() || !j.contains("k") || !j.at("k").is_number_integer())
                return error(400, "body must be {\"k\": <vertex>}");
            k = j.at("k").get<std::int64_t>();
        } catch (const InvalidInput& e) {
            return error(400, e.what());
        }
        Outcome out;
        {
            std::lock_guard lock(s->mu);
            const Node& cur = s->nodes[s->current];
            const auto n = static_cast<std::int64_t>(cur.matrix.rank());
            if (k < 1 || k > n)
                return error(409, "vertex " + std::to_string(k) + " out of range 1.." + std::to_string(n),
                             matrix_key(cur.matrix).hex());
            const Index v = static_cast<Index>(k - 1);
            std::optional<std::size_t> child;
            for (std::size_t i = 0; i < s->nodes.size(); ++i)
                if (s->nodes[i].parent == s->current && s->nodes[i].k == v) child = i;
            if (!child) {
                s->nodes.push_back({s->current, v, coxmut::mutate(cur.matrix, v)});
                child = s->nodes.size() - 1;
            }
            s->current = *child;
            out = {200, state_locked(*s)};
        }
        dump();
        return out;
    }

    Outcome undo(const std::string& id)
    {
        auto s = find(id);
        if (!s) return not_found(id);
        Outcome out;
        {
            std::lock_guard lock(s->mu);
            const Node& cur = s->nodes[s->current];
            if (!cur.parent) return error(409, "nothing to undo", matrix_key(cur.matrix).hex());
            s->current = *cur.parent;
            out = {200, state_locked(*s)};
        }
        dump();
        return out;
    }

    Outcome presentation(const std::string& id)
    {
        auto s = find(id);
        if (!s) return not_found(id);
        const auto [m, custom] = snapshot(*s);
        const std::string key = matrix_key(m).hex();
        try {
            std::vector<ExtraRelator> extra;
            if (custom) extra = custom->extra;
            const auto p = build_presentation(diagram_view(m), extra);
            return {200, {{"canonical_key", key}, {"text", "# canonical_key " + key + "\n" + emit_presentation(p)}}};
        } catch (const std::exception& e) {
            return error(422, e.what(), key);
        }
    }

    /// Waits up to `async_ms` for the analysis; 202 with a poll URL after that.
    Outcome analysis(const std::string& id)
    {
        auto s = find(id);
        if (!s) return not_found(id);
        auto [m, custom] = snapshot(*s);
        Input in{m, std::move(custom)};
        std::string cache_key = matrix_key(m).hex() + "|";
        for (auto x : m.entries()) cache_key += std::to_string(x) + ",";
        if (in.custom) cache_key += "|custom";
        std::shared_future<Outcome> fut;
        {
            std::lock_guard lock(cache_mu_);
            auto it = cache_.find(cache_key);
            if (it == cache_.end()) {
                const Caps caps = caps_;
                it = cache_.emplace(cache_key, std::async(std::launch::async, [in, caps]() -> Outcome {
                                                   try {
                                                       return analysis_outcome(in, caps);
                                                   } catch (const std::exception& e) {
                                                       return {422, {{"canonical_key", matrix_key(in.matrix).hex()},
                                                                     {"error", "analysis unavailable"},
                                                                     {"reason", e.what()}}};
                                                   }
                                               }).share())
                         .first;
                ++analyses_started_;
            }
            fut = it->second;
        }
        if (fut.wait_for(std::chrono::milliseconds(caps_.async_ms)) != std::future_status::ready)
            return {202, {{"canonical_key", matrix_key(m).hex()},
                          {"status", "pending"},
                          {"poll", "/api/sessions/" + id + "/analysis"}}};
        return fut.get();
    }

    /// Number of analyses actually computed (cache misses).
    std::size_t analyses_started() const
    {
        std::lock_guard lock(cache_mu_);
        return analyses_started_;
    }

    Json dump_json()
    {
        std::vector<std::shared_ptr<Session>> all;
        {
            std::lock_guard lock(sessions_mu_);
            for (auto& [id, s] : sessions_) all.push_back(s);
        }
        Json out = Json::array();
        for (auto& s : all) {
            std::lock_guard lock(s->mu);
            Json j = state_locked(*s);
            Json nodes = Json::array();
            for (const auto& n : s->nodes) nodes.push_back(to_json(n.matrix));
            j["node_matrices"] = std::move(nodes);
            out.push_back(std::move(j));
        }
        return out;
    }

    /// Registers the HTTP routes.
    void mount(httplib::Server& srv)
    {
        auto send = [](httplib::Response& res, const Outcome& o) {
            res.status = o.status;
            res.set_header("Access-Control-Allow-Origin", "*");
            res.set_content(o.body.dump(2) + "\n", "application/json");
        };
        srv.Post("/api/sessions", [this, send](const httplib::Request& req, httplib::Response& res) {
            send(res, create(req.body));
        });
        srv.Get(R"(/api/sessions/([^/]+))", [this, send](const httplib::Request& req, httplib::Response& res) {
            send(res, get(req.matches[1]));
        });
        srv.Post(R"(/api/sessions/([^/]+)/mutate)", [this, send](const httplib::Request& req, httplib::Response& res) {
            send(res, mutate(req.matches[1], req.body));
        });
        srv.Post(R"(/api/sessions/([^/]+)/undo)", [this, send](const httplib::Request& req, httplib::Response& res) {
            send(res, undo(req.matches[1]));
        });
        srv.Get(R"(/api/sessions/([^/]+)/analysis)", [this, send](const httplib::Request& req, httplib::Response& res) {
            send(res, analysis(req.matches[1]));
        });
        srv.Get(R"(/api/sessions/([^/]+)/presentation)",
                [this, send](const httplib::Request& req, httplib::Response& res) {
                    const Outcome o = presentation(req.matches[1]);
                    res.status = o.status;
                    res.set_header("Access-Control-Allow-Origin", "*");
                    if (o.status == 200) {
                        res.set_header("X-Canonical-Key", o.body.at("canonical_key").get<std::string>());
                        res.set_content(o.body.at("text").get<std::string>(), "text/plain");
                    } else {
                        res.set_content(o.body.dump(2) + "\n", "application/json");
                    }
                });
    }

private:
    struct Node {
        std::optional<std::size_t> parent;
        std::optional<Index> k; ///< mutation that produced this node
        ExchangeMatrix matrix;
    };

    struct Session {
        std::mutex mu;
        std::string id;
        std::vector<Node> nodes; ///< history tree, nodes[0] is the root
        std::size_t current = 0;
        std::optional<CustomInput> custom; ///< applies to the root node only
    };

    static Outcome error(int status, const std::string& msg, const std::string& key = {})
    {
        Json j;
        if (!key.empty()) j["canonical_key"] = key;
        j["error"] = msg;
        return {status, std::move(j)};
    }

    static Outcome not_found(const std::string& id) { return error(404, "unknown session " + id); }

    std::shared_ptr<Session> find(const std::string& id)
    {
        std::lock_guard lock(sessions_mu_);
        auto it = sessions_.find(id);
        return it == sessions_.end() ? nullptr : it->second;
    }

    static std::pair<ExchangeMatrix, std::optional<CustomInput>> snapshot(Session& s)
    {
        std::lock_guard lock(s.mu);
        std::optional<CustomInput> custom;
        if (s.current == 0) custom = s.custom;
        return {s.nodes[s.current].matrix, std::move(custom)};
    }

    static Json state(Session& s)
    {
        std::lock_guard lock(s.mu);
        return state_locked(s);
    }

    static Json state_locked(const Session& s)
    {
        const ExchangeMatrix& m = s.nodes[s.current].matrix;
        Json j;
        j["id"] = s.id;
        j["canonical_key"] = matrix_key(m).hex();
        j["matrix"] = to_json(m);
        j["diagram"] = to_json(diagram_view(m));
        std::vector<Index> path;
        for (std::optional<std::size_t> n = s.current; n && s.nodes[*n].k; n = s.nodes[*n].parent)
            path.push_back(*s.nodes[*n].k);
        std::reverse(path.begin(), path.end());
        Json nodes = Json::array();
        for (std::size_t i = 0; i < s.nodes.size(); ++i) {
            const auto& n = s.nodes[i];
            nodes.push_back({{"id", i},
                             {"parent", n.parent ? Json(*n.parent) : Json(nullptr)},
                             {"k", n.k ? Json(*n.k + 1) : Json(nullptr)},
                             {"canonical_key", matrix_key(n.matrix).hex()}});
        }
        j["history"] = {{"current", s.current}, {"sequence", to_json(MutationSequence(path))}, {"nodes", std::move(nodes)}};
        j["custom"] = s.custom.has_value() && s.current == 0;
        return j;
    }

    void dump()
    {
        if (dump_path_.empty()) return;
        const Json j = dump_json();
        std::lock_guard lock(dump_mu_);
        std::ofstream out(dump_path_, std::ios::trunc);
        out << j.dump(2) << '\n';
    }

    Caps caps_;
    std::string dump_path_;
    std::mutex sessions_mu_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::uint64_t next_id_ = 0;
    mutable std::mutex cache_mu_;
    std::map<std::string, std::shared_future<Outcome>> cache_;
    std::size_t analyses_started_ = 0;
    std::mutex dump_mu_;
};

} // namespace coxmut::tools

#endif // COXMUT_TOOLS_SERVICE_HPP
