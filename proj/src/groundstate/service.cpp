// Copyright 2026 The augerqc Authors
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

#include "groundstate/service.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstdio>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "common/error.hpp"

namespace augerqc::groundstate {

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string error_reply(const std::string& msg) { return nlohmann::json{{"error", msg}}.dump(); }

std::string tokens_json(const TokenSequence& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + "]";
}

}  // namespace

ProposerService::ProposerService(const EnergyEvaluator& eval, const OperatorPool& pool, ServiceOptions opts)
    : eval_(eval), pool_(pool), opts_(opts), buffer_(opts.buffer_capacity) {
  if (pool.n_qubits() != eval.n_qubits()) throw InvalidArgument("pool and Hamiltonian registers differ");
}

std::string ProposerService::handle(const std::string& line) {
  nlohmann::json req;
  try {
    req = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    return error_reply(std::string("malformed JSON: ") + e.what());
  }
  if (!req.is_object() || !req.contains("op") || !req["op"].is_string())
    return error_reply("request must be an object with a string \"op\"");
  const std::string op = req["op"];

  if (op == "pool_info") {
    return "{\"L\":" + std::to_string(pool_.size()) + ",\"depth_hint\":" + std::to_string(opts_.depth_hint) +
           ",\"n_qubits\":" + std::to_string(pool_.n_qubits()) + "}";
  }
  if (op == "shutdown") {
    shutdown_ = true;
    return "{\"ok\":true}";
  }
  if (op == "buffer") {
    std::string s = "{\"records\":[";
    bool first = true;
    for (const auto& r : buffer_.records()) {
      if (!first) s += ',';
      first = false;
      s += "{\"tokens\":" + tokens_json(r.tokens) + ",\"energy\":" + format_float(r.energy) + "}";
    }
    return s + "]}";
  }
  if (op == "evaluate") {
    if (!req.contains("sequences") || !req["sequences"].is_array())
      return error_reply("evaluate needs a \"sequences\" array");
    const auto& seqs = req["sequences"];
    if (seqs.size() > opts_.max_batch)
      return error_reply("batch of " + std::to_string(seqs.size()) + " exceeds the limit of " +
                         std::to_string(opts_.max_batch));
    std::vector<TokenSequence> batch;
    for (const auto& s : seqs) {
      if (!s.is_array()) return error_reply("each sequence must be an array of token indices");
      TokenSequence t;
      for (const auto& v : s) {
        if (!v.is_number_unsigned() || v.get<std::size_t>() >= pool_.size())
          return error_reply("token outside 0.." + std::to_string(pool_.size() - 1));
        t.push_back(v.get<std::size_t>());
      }
      batch.push_back(std::move(t));
    }
    std::string s = "{\"energies\":[";
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const double e = eval_.evaluate_tokens(pool_, batch[i]);
      buffer_.insert({batch[i], e, evaluations_++});
      if (i) s += ',';
      s += format_float(e);
    }
    return s + "]}";
  }
  return error_reply("unknown op \"" + op + "\"");
}

void ProposerService::serve(std::istream& in, std::ostream& out) {
  std::string line;
  while (!shutdown_ && std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out << handle(line) << '\n' << std::flush;
  }
}

int ProposerService::serve_tcp(int port, const std::function<void(int)>& on_ready) {
  const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd < 0) throw Error("cannot create socket");
  int yes = 1;
  ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
  addr.sin_port = htons(static_cast<std::uint16_t>(port));
  if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(fd, 1) != 0) {
    ::close(fd);
    throw Error("cannot listen on port " + std::to_string(port));
  }
  socklen_t len = sizeof addr;
  ::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len);
  const int bound = ntohs(addr.sin_port);
  if (on_ready) on_ready(bound);

  while (!shutdown_) {
    const int client = ::accept(fd, nullptr, nullptr);
    if (client < 0) continue;
    std::string pending;
    char chunk[4096];
    while (!shutdown_) {
      const auto n = ::recv(client, chunk, sizeof chunk, 0);
      if (n <= 0) break;
      pending.append(chunk, static_cast<std::size_t>(n));
      std::size_t nl;
      while (!shutdown_ && (nl = pending.find('\n')) != std::string::npos) {
        const std::string line = pending.substr(0, nl);
        pending.erase(0, nl + 1);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string reply = handle(line) + "\n";
        std::size_t sent = 0;
        while (sent < reply.size()) {
          const auto w = ::send(client, reply.data() + sent, reply.size() - sent, MSG_NOSIGNAL);
          if (w <= 0) break;
          sent += static_cast<std::size_t>(w);
        }
      }
    }
    ::close(client);
  }
  ::close(fd);
  return bound;
}

}  // namespace augerqc::groundstate
