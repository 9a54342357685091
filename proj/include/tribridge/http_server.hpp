// Copyright 2026 The Tribridge Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// HTTP/JSON front end for SessionManager.
//
//   POST /api/sessions                      body: {"seats": [...], "seed": n}
//   GET  /api/sessions/{id}/view?seat=s
//   POST /api/sessions/{id}/action          body: envelope with an action payload
//   GET  /api/sessions/{id}/events?since=v&timeout=ms     (long-poll)
//   GET  /api/sessions/{id}/stream?seat=s   WebSocket upgrade
//
// On the WebSocket every frame is one JSON envelope. The server pushes
// "event" messages followed by a fresh "view" whenever the stateVersion
// moves; clients send "action" or "view" messages and get an "ack" or an
// "error" back.
//
// Errors are {"error": kind, "message": text} with the rule name added for
// illegal actions: 400 parse, 404 not found, 409 conflict, 422 illegal.

#ifndef TRIBRIDGE_HTTP_SERVER_HPP_
#define TRIBRIDGE_HTTP_SERVER_HPP_

#include <sys/socket.h>

#include <atomic>
#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/steady_timer.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <utility>

#include "json.hpp"
#include "tribridge/service.hpp"

namespace tribridge {

namespace net = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = net::ip::tcp;

namespace detail {

struct Target {
  std::vector<std::string> path;
  std::map<std::string, std::string> query;
};

inline Target parse_target(std::string_view target) {
  Target t;
  const auto q = target.find('?');
  std::string_view path = target.substr(0, q);
  while (!path.empty()) {
    if (path.front() == '/') {
      path.remove_prefix(1);
      continue;
    }
    const auto slash = path.find('/');
    t.path.emplace_back(path.substr(0, slash));
    path = slash == std::string_view::npos ? std::string_view{} : path.substr(slash);
  }
  if (q != std::string_view::npos) {
    std::string_view rest = target.substr(q + 1);
    while (!rest.empty()) {
      const auto amp = rest.find('&');
      const std::string_view item = rest.substr(0, amp);
      const auto eq = item.find('=');
      t.query[std::string(item.substr(0, eq))] =
          eq == std::string_view::npos ? "" : std::string(item.substr(eq + 1));
      rest = amp == std::string_view::npos ? std::string_view{} : rest.substr(amp + 1);
    }
  }
  return t;
}

inline std::int64_t query_int(const Target& t, const std::string& key,
                              std::optional<std::int64_t> fallback = std::nullopt) {
  const auto it = t.query.find(key);
  if (it == t.query.end()) {
    if (fallback) return *fallback;
    throw ParseError("missing query parameter '" + key + "'");
  }
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(it->second);
    return v;
  } catch (const std::exception&) {
    throw ParseError("query parameter '" + key + "' must be an integer");
  }
}

struct ErrorReply {
  http::status status;
  nlohmann::json body;
};

// Maps the library's exception types onto status codes and JSON bodies.
inline ErrorReply describe_error(std::exception_ptr error) {
  auto reply = [](http::status s, const char* kind, const std::string& msg) {
    return ErrorReply{s, {{"error", kind}, {"message", msg}}};
  };
  try {
    std::rethrow_exception(error);
  } catch (const IllegalAction& e) {
    ErrorReply r = reply(http::status::unprocessable_entity, "illegal-action", e.what());
    r.body["rule"] = e.rule();
    return r;
  } catch (const NotFound& e) {
    return reply(http::status::not_found, "not-found", e.what());
  } catch (const Conflict& e) {
    return reply(http::status::conflict, "conflict", e.what());
  } catch (const StateError& e) {
    return reply(http::status::conflict, "state-error", e.what());
  } catch (const ParseError& e) {
    return reply(http::status::bad_request, "parse-error", e.what());
  } catch (const DomainError& e) {
    return reply(http::status::bad_request, "invalid-argument", e.what());
  } catch (const nlohmann::json::exception& e) {
    return reply(http::status::bad_request, "parse-error", e.what());
  } catch (const std::exception& e) {
    return reply(http::status::internal_server_error, "internal", e.what());
  }
}

inline nlohmann::json parse_body(const std::string& body) {
  try {
    return body.empty() ? nlohmann::json::object() : nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("request body is not JSON: ") + e.what());
  }
}

// Reads {seat, payload, stateVersion} from an action envelope; a bare
// action with "seat" alongside is accepted too.
inline nlohmann::json handle_action(Session& session, const nlohmann::json& msg) {
  if (!msg.is_object() || !msg.contains("seat")) throw ParseError("action needs a seat");
  const Seat seat = msg.at("seat").get<Seat>();
  const nlohmann::json& payload = msg.contains("payload") ? msg.at("payload") : msg;
  std::optional<std::uint64_t> expected;
  if (msg.contains("stateVersion") && !msg.at("stateVersion").is_null()) {
    expected = msg.at("stateVersion").get<std::uint64_t>();
  }
  const std::uint64_t v = session.apply(seat, parse_action(payload), expected);
  return {{"type", "ack"},
          {"sessionId", session.id()},
          {"seat", seat},
          {"payload", session.view(seat)},
          {"stateVersion", v}};
}

}  // namespace detail

class HttpServer {
 public:
  HttpServer(SessionManager& sessions, const std::string& address, unsigned short port)
      : sessions_(sessions), acceptor_(ioc_) {
    const tcp::endpoint ep(net::ip::make_address(address), port);
    acceptor_.open(ep.protocol());
    acceptor_.set_option(net::socket_base::reuse_address(true));
    acceptor_.bind(ep);
    acceptor_.listen();
  }

  ~HttpServer() { stop(); }

  unsigned short port() const { return acceptor_.local_endpoint().port(); }

  void start() {
    accept_thread_ = std::thread([this] { accept_loop(); });
  }

  // Blocks the caller until stop() is called from another thread.
  void run() {
    accept_loop();
  }

  void stop() {
    if (stopping_.exchange(true)) {
      if (accept_thread_.joinable()) accept_thread_.join();
      return;
    }
    beast::error_code ec;
    ::shutdown(acceptor_.native_handle(), SHUT_RDWR);
    if (accept_thread_.joinable()) accept_thread_.join();
    acceptor_.close(ec);
    std::unique_lock lock(conn_mu_);
    for (auto& [id, c] : conns_) {
      ::shutdown(c.fd, SHUT_RDWR);
      if (c.ioc) c.ioc->stop();
    }
    conn_done_.wait(lock, [&] { return conns_.empty(); });
  }

 private:
  struct ConnInfo {
    int fd = -1;
    net::io_context* ioc = nullptr;
  };

  void accept_loop() {
    while (!stopping_) {
      auto conn_ioc = std::make_unique<net::io_context>();
      beast::error_code ec;
      tcp::socket socket = acceptor_.accept(*conn_ioc, ec);
      if (ec) {
        if (stopping_) return;
        continue;
      }
      std::lock_guard lock(conn_mu_);
      const std::uint64_t id = next_conn_++;
      conns_[id] = {socket.native_handle(), conn_ioc.get()};
      std::thread([this, id, ioc = std::move(conn_ioc), s = std::move(socket)]() mutable {
        serve_connection(*ioc, std::move(s));
        std::lock_guard done(conn_mu_);
        conns_.erase(id);
        conn_done_.notify_all();
      }).detach();
    }
  }

  void serve_connection(net::io_context& ioc, tcp::socket socket) {
    beast::flat_buffer buffer;
    beast::error_code ec;
    for (;;) {
      http::request<http::string_body> req;
      http::read(socket, buffer, req, ec);
      if (ec) return;
      if (websocket::is_upgrade(req)) {
        serve_websocket(ioc, std::move(socket), std::move(req));
        return;
      }
      http::response<http::string_body> res = handle(req);
      res.keep_alive(req.keep_alive());
      res.prepare_payload();
      http::write(socket, res, ec);
      if (ec || !res.keep_alive()) break;
    }
    socket.shutdown(tcp::socket::shutdown_send, ec);
  }

  http::response<http::string_body> reply(const http::request<http::string_body>& req,
                                          http::status status, const nlohmann::json& body) {
    http::response<http::string_body> res{status, req.version()};
    res.set(http::field::content_type, "application/json");
    res.set(http::field::access_control_allow_origin, "*");
    res.body() = body.dump();
    return res;
  }

  http::response<http::string_body> handle(const http::request<http::string_body>& req) {
    try {
      const detail::Target t = detail::parse_target(std::string(req.target()));
      const auto& p = t.path;
      if (p.size() < 2 || p[0] != "api" || p[1] != "sessions") {
        throw NotFound("no route for " + std::string(req.target()));
      }
      if (p.size() == 2 && req.method() == http::verb::post) {
        const SessionConfig cfg = session_config_from_json(detail::parse_body(req.body()));
        const std::string id = sessions_.create(cfg);
        auto session = sessions_.get(id);
        return reply(req, http::status::created,
                     {{"sessionId", id}, {"stateVersion", session->version()}});
      }
      if (p.size() != 4) throw NotFound("no route for " + std::string(req.target()));
      auto session = sessions_.get(p[2]);
      const std::string& what = p[3];
      if (what == "view" && req.method() == http::verb::get) {
        const auto seat = static_cast<Seat>(detail::query_int(t, "seat"));
        return reply(req, http::status::ok, session->view(seat));
      }
      if (what == "action" && req.method() == http::verb::post) {
        return reply(req, http::status::ok,
                     detail::handle_action(*session, detail::parse_body(req.body())));
      }
      if (what == "events" && req.method() == http::verb::get) {
        const auto since = static_cast<std::uint64_t>(detail::query_int(t, "since", 0));
        const auto timeout = std::clamp<std::int64_t>(detail::query_int(t, "timeout", 25000), 0,
                                                      60000);
        wait_interruptibly(*session, since, std::chrono::milliseconds(timeout));
        return reply(req, http::status::ok,
                     {{"sessionId", session->id()},
                      {"stateVersion", session->version()},
                      {"events", session->events_since(since, std::chrono::milliseconds(0))}});
      }
      throw NotFound("no route for " + std::string(req.target()));
    } catch (...) {
      const detail::ErrorReply e = detail::describe_error(std::current_exception());
      return reply(req, e.status, e.body);
    }
  }

  void wait_interruptibly(const Session& session, std::uint64_t since,
                          std::chrono::milliseconds timeout) {
    const auto deadline = std::chrono::steady_clock::now() + timeout;
    while (!stopping_ && session.version() <= since) {
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - std::chrono::steady_clock::now());
      if (left.count() <= 0) return;
      session.wait_for_change(since, std::min(left, std::chrono::milliseconds(100)));
    }
  }

  // One WebSocket per (session, seat). Runs on the connection's own
  // io_context; a timer polls the session version to push updates.
  void serve_websocket(net::io_context& ioc, tcp::socket socket,
                       http::request<http::string_body> req) {
    std::shared_ptr<Session> session;
    Seat seat = 0;
    try {
      const detail::Target t = detail::parse_target(std::string(req.target()));
      if (t.path.size() != 4 || t.path[3] != "stream") throw NotFound("no stream route");
      session = sessions_.get(t.path[2]);
      seat = static_cast<Seat>(detail::query_int(t, "seat"));
      session->view(seat);  // validates the seat
    } catch (...) {
      const detail::ErrorReply e = detail::describe_error(std::current_exception());
      auto res = reply(req, e.status, e.body);
      res.prepare_payload();
      beast::error_code ec;
      http::write(socket, res, ec);
      return;
    }

    websocket::stream<tcp::socket> ws(std::move(socket));
    beast::error_code ec;
    ws.accept(req, ec);
    if (ec) return;

    std::deque<std::string> outbox;
    bool writing = false;
    std::uint64_t pushed = 0;
    beast::flat_buffer inbuf;
    net::steady_timer timer(ioc);

    std::function<void()> flush = [&] {
      if (writing || outbox.empty()) return;
      writing = true;
      ws.text(true);
      ws.async_write(net::buffer(outbox.front()), [&](beast::error_code wec, std::size_t) {
        writing = false;
        if (wec) {
          ioc.stop();
          return;
        }
        outbox.pop_front();
        flush();
      });
    };
    auto send = [&](const nlohmann::json& msg) {
      outbox.push_back(msg.dump());
      flush();
    };
    auto push_updates = [&] {
      const std::uint64_t v = session->version();
      if (v == pushed) return;
      for (auto& e : session->events_since(pushed, std::chrono::milliseconds(0))) send(e);
      send({{"type", "view"},
            {"sessionId", session->id()},
            {"seat", seat},
            {"payload", session->view(seat)},
            {"stateVersion", v}});
      pushed = v;
    };

    std::function<void()> poll = [&] {
      timer.expires_after(std::chrono::milliseconds(50));
      timer.async_wait([&](beast::error_code tec) {
        if (tec || stopping_) {
          if (stopping_) ioc.stop();
          return;
        }
        push_updates();
        poll();
      });
    };

    std::function<void()> read = [&] {
      ws.async_read(inbuf, [&](beast::error_code rec, std::size_t) {
        if (rec) {
          ioc.stop();
          return;
        }
        const std::string text = beast::buffers_to_string(inbuf.data());
        inbuf.consume(inbuf.size());
        try {
          nlohmann::json msg = detail::parse_body(text);
          const std::string type = msg.value("type", "");
          msg["seat"] = seat;  // the connection is bound to its seat
          if (type == "action") {
            send(detail::handle_action(*session, msg));
          } else if (type == "view") {
            send({{"type", "view"},
                  {"sessionId", session->id()},
                  {"seat", seat},
                  {"payload", session->view(seat)},
                  {"stateVersion", session->version()}});
          } else {
            throw ParseError("unknown message type '" + type + "'");
          }
        } catch (...) {
          const detail::ErrorReply e = detail::describe_error(std::current_exception());
          send({{"type", "error"},
                {"sessionId", session->id()},
                {"seat", seat},
                {"payload", e.body},
                {"stateVersion", session->version()}});
        }
        read();
      });
    };

    push_updates();
    poll();
    read();
    ioc.run();
    ws.next_layer().close(ec);
  }

  SessionManager& sessions_;
  net::io_context ioc_;
  tcp::acceptor acceptor_;
  std::atomic<bool> stopping_{false};
  std::thread accept_thread_;

  std::mutex conn_mu_;
  std::condition_variable conn_done_;
  std::map<std::uint64_t, ConnInfo> conns_;
  std::uint64_t next_conn_ = 0;
};

}  // namespace tribridge

#endif  // TRIBRIDGE_HTTP_SERVER_HPP_
