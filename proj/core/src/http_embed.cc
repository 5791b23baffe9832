// Copyright 2026 The vedsum Authors.
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

#include <algorithm>
#include <string>

#include "httplib.h"
#include "json.hpp"
#include "vedsum/embed.h"
#include "vedsum/error.h"

namespace vedsum {
namespace {

struct Endpoint {
  std::string scheme_host_port;
  std::string path;  // "<prefix>/embed"
};

Endpoint parse_endpoint(std::string_view url) {
  constexpr std::string_view kScheme = "http://";
  if (!url.starts_with(kScheme)) {
    throw Error(ErrorCode::kInvalidArgument,
                "endpoint must be an http:// url", std::string(url));
  }
  const std::size_t slash = url.find('/', kScheme.size());
  Endpoint ep;
  ep.scheme_host_port = std::string(url.substr(0, slash));
  std::string prefix =
      slash == std::string_view::npos ? "" : std::string(url.substr(slash));
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  ep.path = prefix + "/embed";
  if (ep.scheme_host_port.size() == kScheme.size()) {
    throw Error(ErrorCode::kInvalidArgument, "endpoint has no host",
                std::string(url));
  }
  return ep;
}

}  // namespace

HttpEmbedding http_embed(std::string_view endpoint,
                         std::span<const std::string> texts,
                         std::size_t batch_size) {
  if (texts.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no sentences to embed",
                std::string(endpoint));
  }
  if (batch_size == 0) {
    throw Error(ErrorCode::kInvalidArgument, "batch size must be >= 1");
  }
  const Endpoint ep = parse_endpoint(endpoint);
  const std::string url = ep.scheme_host_port + ep.path;

  httplib::Client client(ep.scheme_host_port);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(300, 0);
  client.set_write_timeout(60, 0);

  HttpEmbedding out;
  out.vectors.reserve(texts.size());
  for (std::size_t begin = 0; begin < texts.size(); begin += batch_size) {
    const std::size_t end = std::min(texts.size(), begin + batch_size);
    nlohmann::json request;
    request["sentences"] = nlohmann::json::array();
    for (std::size_t i = begin; i < end; ++i) {
      request["sentences"].push_back(texts[i]);
    }

    auto res = client.Post(ep.path, request.dump(), "application/json");
    if (!res) {
      throw Error(ErrorCode::kTransportError, httplib::to_string(res.error()),
                  url);
    }
    nlohmann::json body = nlohmann::json::parse(res->body, nullptr, false);
    if (res->status >= 400) {
      std::string message = "HTTP " + std::to_string(res->status);
      if (body.is_object() && body.contains("error") &&
          body["error"].is_string()) {
        message += ": " + body["error"].get<std::string>();
      }
      throw Error(ErrorCode::kTransportError, message, url);
    }
    if (res->status != 200) {
      throw Error(ErrorCode::kProtocolError,
                  "unexpected HTTP status " + std::to_string(res->status), url);
    }
    if (body.is_discarded() || !body.is_object()) {
      throw Error(ErrorCode::kProtocolError, "response is not a JSON object",
                  url);
    }
    auto dim_it = body.find("dim");
    auto vec_it = body.find("vectors");
    if (dim_it == body.end() || !dim_it->is_number_unsigned() ||
        dim_it->get<std::size_t>() == 0) {
      throw Error(ErrorCode::kProtocolError,
                  "response needs a positive integer dim", url);
    }
    if (vec_it == body.end() || !vec_it->is_array()) {
      throw Error(ErrorCode::kProtocolError, "response needs a vectors array",
                  url);
    }
    const std::size_t dim = dim_it->get<std::size_t>();
    if (vec_it->size() != end - begin) {
      throw Error(ErrorCode::kProtocolError,
                  "sent " + std::to_string(end - begin) + " sentences, got " +
                      std::to_string(vec_it->size()) + " vectors",
                  url);
    }
    if (out.dim == 0) {
      out.dim = dim;
    } else if (out.dim != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "dim changed between batches: " + std::to_string(out.dim) +
                      " vs " + std::to_string(dim),
                  url);
    }
    for (const auto& v : *vec_it) {
      if (!v.is_array()) {
        throw Error(ErrorCode::kProtocolError, "vector is not an array", url);
      }
      if (v.size() != dim) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "vector has " + std::to_string(v.size()) +
                        " components, dim is " + std::to_string(dim),
                    url);
      }
      std::vector<double> row;
      row.reserve(dim);
      for (const auto& x : v) {
        if (!x.is_number()) {
          throw Error(ErrorCode::kProtocolError, "non-numeric component", url);
        }
        row.push_back(x.get<double>());
      }
      out.vectors.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace vedsum
