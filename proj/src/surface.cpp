#include "belyi/surface.hpp"

#include <gmp.h>

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace belyi {

namespace {

using Index = Permutation::Index;

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    auto& p = parent[static_cast<std::size_t>(x)];
    p = parent[static_cast<std::size_t>(p)];
    x = p;
  }
  return x;
}

int count_components(int vertices, int regularity, std::span<const Index> alpha,
                     std::vector<int>& parent) {
  parent.resize(static_cast<std::size_t>(vertices));
  std::iota(parent.begin(), parent.end(), 0);
  int components = vertices;
  for (std::size_t h = 0; h < alpha.size(); ++h) {
    const int a = find_root(parent, static_cast<int>(h) / regularity);
    const int b = find_root(parent, static_cast<int>(alpha[h]) / regularity);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components;
}

FaceSpectrum spectrum_from(int vertices, int regularity, std::span<const Index> beta,
                           std::span<const Index> alpha, std::vector<Index>& phi,
                           std::vector<std::uint8_t>& visited, std::vector<int>& parent) {
  phi.resize(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) phi[i] = beta[alpha[i]];

  FaceSpectrum out;
  out.vertices = vertices;
  out.regularity = regularity;
  out.lengths = cycle_lengths(phi, visited);
  out.face_count = static_cast<int>(out.lengths.size());
  out.largest = out.lengths.empty() ? 0 : out.lengths.front();
  out.components = count_components(vertices, regularity, alpha, parent);
  // Euler characteristic V - E + F, even by the parity of beta*alpha.
  const int half = vertices * regularity / 2;
  const int euler = vertices - half + out.face_count;
  if (euler % 2 != 0) throw std::logic_error("faces: odd Euler characteristic");
  out.genus = out.components - euler / 2;
  if (out.genus < 0) throw std::logic_error("faces: negative genus");
  return out;
}

void check_parameters(int vertices, int regularity) {
  if (regularity < 3) throw std::invalid_argument("oriented graph: regularity must be >= 3");
  if (vertices < 1) throw std::invalid_argument("oriented graph: need at least one vertex");
  if ((static_cast<long long>(vertices) * regularity) % 2 != 0)
    throw std::invalid_argument("oriented graph: k*n must be even");
}

void draw_beta(int vertices, int regularity, Rng& rng, std::vector<Index>& beta,
               std::vector<Index>& block) {
  const auto k = static_cast<std::size_t>(regularity);
  beta.resize(static_cast<std::size_t>(vertices) * k);
  block.resize(k);
  for (std::size_t v = 0; v < static_cast<std::size_t>(vertices); ++v) {
    std::iota(block.begin(), block.end(), static_cast<Index>(v * k));
    shuffle(std::span(block), rng);
    for (std::size_t j = 0; j < k; ++j) beta[block[j]] = block[(j + 1) % k];
  }
}

void draw_alpha(std::size_t half_edges, Rng& rng, std::vector<Index>& alpha,
                std::vector<Index>& order) {
  order.resize(half_edges);
  std::iota(order.begin(), order.end(), Index{0});
  shuffle(std::span(order), rng);
  alpha.resize(half_edges);
  for (std::size_t i = 0; i < half_edges; i += 2) {
    alpha[order[i]] = order[i + 1];
    alpha[order[i + 1]] = order[i];
  }
}

}  // namespace

OrientedGraphModel::OrientedGraphModel(int vertices, int regularity, Permutation beta,
                                       Permutation alpha)
    : vertices_(vertices), regularity_(regularity), beta_(std::move(beta)), alpha_(std::move(alpha)) {
  check_parameters(vertices, regularity);
  const auto n_half = static_cast<std::size_t>(vertices) * static_cast<std::size_t>(regularity);
  if (beta_.degree() != n_half || alpha_.degree() != n_half)
    throw std::invalid_argument("oriented graph: permutations must act on k*n half-edges");
  for (std::size_t h = 0; h < n_half; ++h) {
    const Index a = alpha_(static_cast<Index>(h));
    if (a == h || alpha_(a) != h)
      throw std::invalid_argument("oriented graph: alpha is not a fixed-point-free involution");
    if (vertex_of(beta_(static_cast<Index>(h))) != vertex_of(static_cast<Index>(h)))
      throw std::invalid_argument("oriented graph: beta leaves a vertex block");
  }
  for (int v = 0; v < vertices; ++v) {
    // One k-cycle per block: following beta from the first half-edge returns
    // after exactly k steps.
    const auto start = static_cast<Index>(v * regularity);
    Index h = start;
    int steps = 0;
    do {
      h = beta_(h);
      ++steps;
    } while (h != start && steps <= regularity);
    if (steps != regularity)
      throw std::invalid_argument("oriented graph: beta is not a k-cycle on vertex " +
                                  std::to_string(v + 1));
  }
}

std::vector<std::pair<int, int>> OrientedGraphModel::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(half_edges() / 2);
  for (Index h = 0; h < half_edges(); ++h) {
    const Index a = alpha_(h);
    if (h < a) out.emplace_back(vertex_of(h), vertex_of(a));
  }
  return out;
}

bool OrientedGraphModel::is_simple() const {
  std::vector<std::pair<int, int>> seen;
  for (auto [u, v] : edges()) {
    if (u == v) return false;
    seen.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

int OrientedGraphModel::component_count() const {
  std::vector<int> parent;
  return count_components(vertices_, regularity_, alpha_.images(), parent);
}

OrientedGraphModel sample_oriented_graph(int vertices, int regularity, Rng& rng, bool simple) {
  check_parameters(vertices, regularity);
  std::vector<Index> beta, alpha, scratch;
  while (true) {
    draw_beta(vertices, regularity, rng, beta, scratch);
    draw_alpha(beta.size(), rng, alpha, scratch);
    OrientedGraphModel model(vertices, regularity, Permutation(beta), Permutation(alpha));
    if (!simple || model.is_simple()) return model;
  }
}

FaceSpectrum faces(const OrientedGraphModel& model) {
  std::vector<Index> phi;
  std::vector<std::uint8_t> visited;
  std::vector<int> parent;
  return spectrum_from(model.vertices(), model.regularity(), model.beta().images(),
                       model.alpha().images(), phi, visited, parent);
}

int euler_genus(int vertices, int regularity, int faces) {
  const long long twice_edges = static_cast<long long>(vertices) * regularity;
  const long long numerator = twice_edges / 2 - vertices - faces;
  if (twice_edges % 2 != 0 || numerator % 2 != 0)
    throw std::logic_error("genus: non-integral value for n=" + std::to_string(vertices) +
                           ", l=" + std::to_string(faces));
  const long long g = 1 + numerator / 2;
  if (g < 0)
    throw std::logic_error("genus: negative value for n=" + std::to_string(vertices) +
                           ", l=" + std::to_string(faces));
  return static_cast<int>(g);
}

int genus(int vertices, int faces) { return euler_genus(vertices, 3, faces); }

BigInt configuration_count(int pairs) {
  if (pairs < 0) throw std::invalid_argument("configuration_count: negative pair count");
  if (pairs == 0) return 1;
  BigInt out;
  mpz_2fac_ui(out.backend().data(), static_cast<unsigned long>(2 * pairs - 1));
  return out;
}

BigInt configuration_count_fixed_edges(int pairs, int fixed) {
  if (fixed < 0 || fixed > pairs)
    throw std::invalid_argument("configuration_count_fixed_edges: need 0 <= l <= m");
  BigInt divisor = 1;
  for (int j = 0; j < fixed; ++j) divisor *= (2 * pairs - 1 - 2 * j);
  const BigInt total = configuration_count(pairs);
  if (total % divisor != 0) throw std::logic_error("configuration_count_fixed_edges: inexact");
  return total / divisor;
}

std::vector<std::uint64_t> short_cycle_counts(const OrientedGraphModel& model, int max_len) {
  if (max_len < 1 || max_len > 12)
    throw std::invalid_argument("short_cycle_counts: max_len must be in 1..12");
  const int n = model.vertices();
  const auto edge_list = model.edges();
  // adjacency[v] = (neighbour, edge id); loops are kept out of the walk.
  std::vector<std::vector<std::pair<int, int>>> adjacency(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_len) + 1, 0);
  for (std::size_t e = 0; e < edge_list.size(); ++e) {
    const auto [u, v] = edge_list[e];
    if (u == v) {
      ++counts[1];
      continue;
    }
    adjacency[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(e));
    adjacency[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(e));
  }

  std::vector<std::uint8_t> on_path(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> closed(static_cast<std::size_t>(max_len) + 1, 0);
  // Walks start at the smallest vertex of the cycle, so every cycle of length
  // >= 2 is found exactly twice (once per direction).
  auto dfs = [&](auto&& self, int start, int current, int last_edge, int depth) -> void {
    for (const auto& [next, edge] : adjacency[static_cast<std::size_t>(current)]) {
      if (edge == last_edge) continue;
      if (next == start) {
        if (depth >= 2) ++closed[static_cast<std::size_t>(depth)];
        continue;
      }
      if (next < start || on_path[static_cast<std::size_t>(next)] || depth == max_len) continue;
      on_path[static_cast<std::size_t>(next)] = 1;
      self(self, start, next, edge, depth + 1);
      on_path[static_cast<std::size_t>(next)] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    on_path[static_cast<std::size_t>(s)] = 1;
    dfs(dfs, s, s, -1, 1);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  for (int len = 2; len <= max_len; ++len)
    counts[static_cast<std::size_t>(len)] = closed[static_cast<std::size_t>(len)] / 2;
  return counts;
}

void write_model(std::ostream& out, const OrientedGraphModel& model) {
  out << "n " << model.vertices() << '\n'
      << "k " << model.regularity() << '\n'
      << "beta " << model.beta().to_string() << '\n'
      << "alpha " << model.alpha().to_string() << '\n';
}

OrientedGraphModel read_model(std::istream& in) {
  std::map<std::string, std::string> fields;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ls(line);
    std::string key, value;
    ls >> key;
    std::getline(ls, value);
    const auto first = value.find_first_not_of(" \t");
    fields[key] = first == std::string::npos ? "" : value.substr(first);
  }
  for (const char* key : {"n", "k", "beta", "alpha"})
    if (!fields.contains(key))
      throw std::invalid_argument(std::string("read_model: missing field '") + key + "'");
  const int n = std::stoi(fields["n"]);
  const int k = std::stoi(fields["k"]);
  const auto degree = static_cast<std::size_t>(n) * static_cast<std::size_t>(k);
  return OrientedGraphModel(n, k, Permutation::parse(fields["beta"], degree),
                            Permutation::parse(fields["alpha"], degree));
}

OrientedGraphModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  return read_model(in);
}

void write_edge_list(std::ostream& out, const OrientedGraphModel& model) {
  out << "# n=" << model.vertices() << " k=" << model.regularity() << '\n'
      << "# beta " << model.beta().to_string() << '\n'
      << "# u v hu hv\n";
  for (Index h = 0; h < model.half_edges(); ++h) {
    const Index a = model.alpha()(h);
    if (h > a) continue;
    out << model.vertex_of(h) + 1 << ' ' << model.vertex_of(a) + 1 << ' ' << h + 1 << ' '
        << a + 1 << '\n';
  }
}

FaceSampler::FaceSampler(int vertices, int regularity)
    : vertices_(vertices), regularity_(regularity) {
  check_parameters(vertices, regularity);
}

FaceSpectrum FaceSampler::sample(Rng& rng) {
  draw_beta(vertices_, regularity_, rng, beta_, block_);
  draw_alpha(beta_.size(), rng, alpha_, block_);
  return spectrum_from(vertices_, regularity_, beta_, alpha_, phi_, visited_, parent_);
}

}  // namespace belyi
