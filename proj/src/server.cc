// Copyright 2026 The Lexnorm Authors.
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

#include "lexnorm/server.h"

#include "httplib.h"
#include "json.hpp"
#include "lexnorm/jsonld.h"

namespace lexnorm {
namespace {

std::string ProblemBody(std::string_view code, std::string_view detail) {
  nlohmann::ordered_json body;
  body["error"] = code;
  body["detail"] = detail;
  return body.dump() + "\n";
}

DereferenceResponse Problem(int status, std::string_view code,
                            std::string_view detail) {
  return DereferenceResponse{status, "application/json",
                             ProblemBody(code, detail)};
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

// True when the media-range list admits a JSON representation. Quality
// values are ignored; an absent header means no constraint.
bool AcceptsJson(const std::optional<std::string>& accept) {
  if (!accept) return true;
  std::string folded = AsciiLower(*accept);
  std::string_view rest = folded;
  if (Trim(rest).empty()) return true;
  while (!rest.empty()) {
    size_t comma = rest.find(',');
    std::string_view range =
        rest.substr(0, comma == std::string_view::npos ? rest.size() : comma);
    rest = comma == std::string_view::npos ? std::string_view()
                                           : rest.substr(comma + 1);
    size_t semi = range.find(';');
    if (semi != std::string_view::npos) range = range.substr(0, semi);
    range = Trim(range);
    if (range == "application/ld+json" || range == "application/json" ||
        range == "application/*" || range == "*/*") {
      return true;
    }
  }
  return false;
}

}  // namespace

DereferenceResponse HandleDereference(const KnowledgeGraph& snapshot,
                                      const DereferenceRequest& request,
                                      std::string_view base) {
  std::string canonical;
  try {
    canonical = NormalizeUrn(PercentDecode(request.urn_param));
  } catch (const UrnError& e) {
    return Problem(400, ToString(e.code()), e.what());
  }

  std::optional<NormWork> work = snapshot.GetNorm(canonical);
  if (!work) {
    return Problem(404, "NOT_FOUND", "no work stored under " + canonical);
  }

  if (!AcceptsJson(request.accept_header)) {
    return Problem(406, "NOT_ACCEPTABLE",
                   "only application/ld+json is served");
  }

  JsonLdDocument doc = EmitDocument(*work, base);
  return DereferenceResponse{200, std::string(kJsonLdMediaType) + "; charset=utf-8",
                             std::move(doc.text)};
}

struct LinkedDataServer::Impl {
  SharedGraph& graph;
  std::string base;
  httplib::Server server;

  Impl(SharedGraph& g, std::string b) : graph(g), base(std::move(b)) {
    server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
      res.status = 200;
      res.set_content("ok", "text/plain");
    });

    server.Get("/", [this](const httplib::Request& req, httplib::Response& res) {
      DereferenceRequest deref;
      deref.urn_param = req.get_param_value("urn");
      if (req.has_header("Accept")) {
        deref.accept_header = req.get_header_value("Accept");
      }
      auto snapshot = graph.Snapshot();
      DereferenceResponse out = HandleDereference(*snapshot, deref, base);
      res.status = out.status;
      res.set_content(out.body, out.media_type);
    });

    server.Get(R"(/.+)", [](const httplib::Request& req, httplib::Response& res) {
      res.status = 404;
      res.set_content(ProblemBody("NOT_FOUND", "no such endpoint: " + req.path),
                      "application/json");
    });

    auto method_not_allowed = [](const httplib::Request&,
                                 httplib::Response& res) {
      res.status = 405;
      res.set_content(ProblemBody("METHOD_NOT_ALLOWED", "GET only"),
                      "application/json");
    };
    server.Post(R"(/.*)", method_not_allowed);
    server.Put(R"(/.*)", method_not_allowed);
    server.Patch(R"(/.*)", method_not_allowed);
    server.Delete(R"(/.*)", method_not_allowed);
  }
};

LinkedDataServer::LinkedDataServer(SharedGraph& graph, std::string base)
    : impl_(std::make_unique<Impl>(graph, std::move(base))) {}

LinkedDataServer::~LinkedDataServer() { Stop(); }

int LinkedDataServer::Start(const std::string& host, int port) {
  int bound = port;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw BindError("cannot bind to " + host);
  } else {
    if (!impl_->server.bind_to_port(host, port)) {
      throw BindError("cannot bind to " + host + ":" + std::to_string(port));
    }
  }
  thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

void LinkedDataServer::Run(const std::string& host, int port) {
  if (!impl_->server.bind_to_port(host, port)) {
    throw BindError("cannot bind to " + host + ":" + std::to_string(port));
  }
  impl_->server.listen_after_bind();
}

void LinkedDataServer::Stop() {
  impl_->server.stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace lexnorm
