// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

// Inline generator spec "kind:p1,p2,..." so experiment scripts avoid temp
// files. Kinds:
//   cycle:n            clique:n
//   two_cliques:k,lambda          two K_k joined by lambda bridges
//   disjoint_cliques:count,size
//   gnp:n,p
//   clique_chain:count,size,bridge
struct GeneratorSpec {
  std::string kind;
  std::vector<double> params;

  static GeneratorSpec parse(const std::string& text);
  std::string to_string() const;
};

// Deterministic for fixed spec and seed; only gnp consumes the seed.
SimpleGraph generate(const GeneratorSpec& spec, std::uint64_t seed);
SimpleGraph generate(const std::string& spec, std::uint64_t seed);

SimpleGraph generate_cycle(std::size_t n);
SimpleGraph generate_clique(std::size_t n);
// Bridge t joins A[t mod k] to B[t div k]; min cut is exactly lambda when
// lambda < k-1. Requires lambda <= k^2.
SimpleGraph generate_two_cliques(std::size_t k, std::size_t lambda);
SimpleGraph generate_disjoint_cliques(std::size_t count, std::size_t size);
SimpleGraph generate_gnp(std::size_t n, double p, std::uint64_t seed);
SimpleGraph generate_clique_chain(std::size_t count, std::size_t size, std::size_t bridge);

// Side of the planted non-singleton cut for families that have one
// (two_cliques, clique_chain: the first clique). Empty otherwise.
std::optional<std::vector<VertexId>> planted_cut_side(const GeneratorSpec& spec);

}  // namespace mincut
