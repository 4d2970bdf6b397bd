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

#ifndef LEXNORM_SERVER_H_
#define LEXNORM_SERVER_H_

#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "lexnorm/graph.h"

namespace lexnorm {

// Raw request data; hostile input is allowed everywhere.
struct DereferenceRequest {
  std::string urn_param;
  std::optional<std::string> accept_header;
};

struct DereferenceResponse {
  int status = 0;  // 200, 400, 404 or 406
  std::string media_type;
  std::string body;
};

// Resolves a ?urn= request against an immutable graph snapshot. Pure:
// (snapshot, request, base) fully determine the response bytes, so the
// dereference contract is testable without sockets.
//
//   400  urn_param does not normalize to a LEX URN
//   404  canonical URN not present in the snapshot
//   406  Accept header excludes the JSON family
//   200  canonical JSON-LD whose "@id" is the request's own URI
//
// The URN is accepted raw or percent-encoded. Error bodies are small
// JSON objects {"error": code, "detail": text}.
DereferenceResponse HandleDereference(const KnowledgeGraph& snapshot,
                                      const DereferenceRequest& request,
                                      std::string_view base);

class BindError : public std::runtime_error {
 public:
  explicit BindError(const std::string& message)
      : std::runtime_error(message) {}
};

// HTTP/1.1 server making every stored work dereferenceable:
//
//   GET /?urn=<urn>   canonical JSON-LD for the work
//   GET /health       liveness probe, "ok"
//
// GET only; other methods get 405. Requests are handled concurrently
// and lock-free over the SharedGraph's current snapshot; each request
// sees exactly one snapshot end to end.
class LinkedDataServer {
 public:
  LinkedDataServer(SharedGraph& graph, std::string base);
  ~LinkedDataServer();

  LinkedDataServer(const LinkedDataServer&) = delete;
  LinkedDataServer& operator=(const LinkedDataServer&) = delete;

  // Binds and serves on a background thread. Pass port 0 for an
  // ephemeral port; returns the bound port. Throws BindError.
  int Start(const std::string& host, int port);

  // Binds and serves on the calling thread until Stop() is invoked
  // (e.g. from a signal handler). Throws BindError.
  void Run(const std::string& host, int port);

  // Graceful shutdown; idempotent and safe to call from another thread.
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::thread thread_;
};

}  // namespace lexnorm

#endif  // LEXNORM_SERVER_H_
