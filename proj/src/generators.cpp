// SPDX-License-Identifier: Apache-2.0
#include "mincut/generators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mincut/rng.hpp"

namespace mincut {

namespace {

std::size_t int_param(const GeneratorSpec& spec, std::size_t index) {
  const double v = spec.params.at(index);
  if (v < 0 || v != std::floor(v)) {
    throw std::invalid_argument("generator " + spec.kind + ": parameter " +
                                std::to_string(index + 1) + " must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

void require_params(const GeneratorSpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    throw std::invalid_argument("generator " + spec.kind + " expects " + std::to_string(count) +
                                " parameter(s), got " + std::to_string(spec.params.size()));
  }
}

void append_clique(std::vector<Edge>& edges, std::size_t first, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      edges.push_back({static_cast<VertexId>(first + i), static_cast<VertexId>(first + j)});
    }
  }
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  GeneratorSpec spec;
  const std::size_t colon = text.find(':');
  spec.kind = text.substr(0, colon);
  if (spec.kind.empty()) throw std::invalid_argument("empty generator kind in spec: " + text);
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::stringstream parts(rest);
    std::string token;
    while (std::getline(parts, token, ',')) {
      try {
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        spec.params.push_back(value);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad generator parameter '" + token + "' in spec: " + text);
      }
    }
  }
  return spec;
}

std::string GeneratorSpec::to_string() const {
  std::ostringstream out;
  out << kind;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out << (i == 0 ? ':' : ',');
    if (params[i] == std::floor(params[i]) && std::abs(params[i]) < 1e15) {
      out << static_cast<long long>(params[i]);
    } else {
      out << params[i];
    }
  }
  return out.str();
}

SimpleGraph generate_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph generate_clique(std::size_t n) {
  if (n < 1) throw std::invalid_argument("clique requires n >= 1");
  std::vector<Edge> edges;
  append_clique(edges, 0, n);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph generate_two_cliques(std::size_t k, std::size_t lambda) {
  if (k < 2) throw std::invalid_argument("two_cliques requires k >= 2");
  if (lambda > k * k) throw std::invalid_argument("two_cliques requires lambda <= k^2");
  std::vector<Edge> edges;
  append_clique(edges, 0, k);
  append_clique(edges, k, k);
  for (std::size_t t = 0; t < lambda; ++t) {
    edges.push_back({static_cast<VertexId>(t % k), static_cast<VertexId>(k + t / k)});
  }
  return SimpleGraph(2 * k, std::move(edges));
}

SimpleGraph generate_disjoint_cliques(std::size_t count, std::size_t size) {
  if (count < 1 || size < 1) throw std::invalid_argument("disjoint_cliques requires count, size >= 1");
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < count; ++c) append_clique(edges, c * size, size);
  return SimpleGraph(count * size, std::move(edges));
}

SimpleGraph generate_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gnp requires n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp requires p in [0, 1]");
  Rng rng(derive_seed(seed, 0x6e70));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.next_double() < p) {
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
      }
    }
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph generate_clique_chain(std::size_t count, std::size_t size, std::size_t bridge) {
  if (count < 2) throw std::invalid_argument("clique_chain requires count >= 2");
  if (size < 2) throw std::invalid_argument("clique_chain requires size >= 2");
  if (bridge < 1 || bridge > size * size) {
    throw std::invalid_argument("clique_chain requires 1 <= bridge <= size^2");
  }
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < count; ++c) append_clique(edges, c * size, size);
  for (std::size_t c = 0; c + 1 < count; ++c) {
    const std::size_t a = c * size;
    const std::size_t b = (c + 1) * size;
    for (std::size_t t = 0; t < bridge; ++t) {
      edges.push_back({static_cast<VertexId>(a + t % size), static_cast<VertexId>(b + t / size)});
    }
  }
  return SimpleGraph(count * size, std::move(edges));
}

SimpleGraph generate(const GeneratorSpec& spec, std::uint64_t seed) {
  if (spec.kind == "cycle") {
    require_params(spec, 1);
    return generate_cycle(int_param(spec, 0));
  }
  if (spec.kind == "clique") {
    require_params(spec, 1);
    return generate_clique(int_param(spec, 0));
  }
  if (spec.kind == "two_cliques") {
    require_params(spec, 2);
    return generate_two_cliques(int_param(spec, 0), int_param(spec, 1));
  }
  if (spec.kind == "disjoint_cliques") {
    require_params(spec, 2);
    return generate_disjoint_cliques(int_param(spec, 0), int_param(spec, 1));
  }
  if (spec.kind == "gnp") {
    require_params(spec, 2);
    return generate_gnp(int_param(spec, 0), spec.params.at(1), seed);
  }
  if (spec.kind == "clique_chain") {
    require_params(spec, 3);
    return generate_clique_chain(int_param(spec, 0), int_param(spec, 1), int_param(spec, 2));
  }
  throw std::invalid_argument("unknown generator kind: " + spec.kind);
}

SimpleGraph generate(const std::string& spec, std::uint64_t seed) {
  return generate(GeneratorSpec::parse(spec), seed);
}

std::optional<std::vector<VertexId>> planted_cut_side(const GeneratorSpec& spec) {
  std::size_t side_size = 0;
  if (spec.kind == "two_cliques" && spec.params.size() == 2) {
    side_size = int_param(spec, 0);
  } else if (spec.kind == "clique_chain" && spec.params.size() == 3) {
    side_size = int_param(spec, 1);
  } else {
    return std::nullopt;
  }
  std::vector<VertexId> side(side_size);
  for (std::size_t i = 0; i < side_size; ++i) side[i] = static_cast<VertexId>(i);
  return side;
}

}  // namespace mincut
