#pragma once

#include "belyi/bigint.hpp"
#include "belyi/permutation.hpp"
#include "belyi/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace belyi {

/// A k-regular multigraph with an orientation, in the permutational model.
///
/// Half-edge numbering: vertex v owns half-edges k*v, ..., k*v + k - 1.
/// `beta` permutes each of these blocks as a single k-cycle (the cyclic order
/// at v) and `alpha` is the fixed-point-free involution pairing half-edges
/// into edges. Faces are the cycles of compose(beta, alpha).
class OrientedGraphModel {
 public:
  /// Throws std::invalid_argument if any invariant fails.
  OrientedGraphModel(int vertices, int regularity, Permutation beta, Permutation alpha);

  int vertices() const noexcept { return vertices_; }
  int regularity() const noexcept { return regularity_; }
  std::size_t half_edges() const noexcept { return beta_.degree(); }
  const Permutation& beta() const noexcept { return beta_; }
  const Permutation& alpha() const noexcept { return alpha_; }
  int vertex_of(Permutation::Index half_edge) const noexcept {
    return static_cast<int>(half_edge) / regularity_;
  }

  /// Edges as (u, v) vertex pairs, one per alpha 2-cycle, ordered by the
  /// smaller half-edge.
  std::vector<std::pair<int, int>> edges() const;
  bool is_simple() const;
  int component_count() const;

 private:
  int vertices_;
  int regularity_;
  Permutation beta_;
  Permutation alpha_;
};

struct FaceSpectrum {
  int vertices = 0;
  int regularity = 0;
  /// Face lengths in half-edges, nonincreasing; they sum to k*n.
  std::vector<int> lengths;
  int face_count = 0;
  int largest = 0;
  int components = 1;
  /// Sum of the genera of the connected components. For a connected graph
  /// this is 1 + (kn/2 - n - l)/2, i.e. 1 + (n - 2l)/4 when k = 3.
  int genus = 0;
};

/// Uniform perfect matching of the half-edges and, independently per vertex,
/// a uniform cyclic order of its k half-edges. Vertices are drawn first (in
/// index order), then the matching. With `simple` set the draw is repeated
/// until the multigraph has no loops or multiple edges.
OrientedGraphModel sample_oriented_graph(int vertices, int regularity, Rng& rng,
                                         bool simple = false);

FaceSpectrum faces(const OrientedGraphModel& model);

/// Euler genus of a connected cubic graph: 1 + (n - 2l)/4.
/// Throws std::logic_error if the value is not a nonnegative integer.
int genus(int vertices, int faces);
/// Same for a connected k-regular graph: 1 + (kn/2 - n - l)/2.
int euler_genus(int vertices, int regularity, int faces);

/// Number of perfect matchings of 2m points, (2m-1)!!.
BigInt configuration_count(int pairs);
/// Matchings of 2m points containing a fixed set of l disjoint pairs.
BigInt configuration_count_fixed_edges(int pairs, int fixed);

/// counts[i] = number of cycles of length i (1 <= i <= max_len) in the
/// underlying multigraph: loops are 1-cycles, pairs of parallel edges are
/// 2-cycles, and longer cycles visit distinct vertices. counts[0] is unused.
std::vector<std::uint64_t> short_cycle_counts(const OrientedGraphModel& model, int max_len);

/// Text serialisation of a model (1-based cycle notation):
///   n <vertices>
///   k <regularity>
///   beta <cycles>
///   alpha <cycles>
/// Lines starting with '#' are comments.
void write_model(std::ostream& out, const OrientedGraphModel& model);
OrientedGraphModel read_model(std::istream& in);
OrientedGraphModel load_model(const std::string& path);

/// Edge list with half-edge annotations: a header comment, then one line
/// "u v hu hv" per edge (all 1-based).
void write_edge_list(std::ostream& out, const OrientedGraphModel& model);

/// Face-length kernel for Monte Carlo loops: samples a model into reusable
/// buffers and returns the face spectrum without building Permutation objects.
/// Consumes exactly the same random draws as sample_oriented_graph(simple=false).
class FaceSampler {
 public:
  FaceSampler(int vertices, int regularity);
  FaceSpectrum sample(Rng& rng);

 private:
  int vertices_;
  int regularity_;
  std::vector<Permutation::Index> beta_;
  std::vector<Permutation::Index> alpha_;
  std::vector<Permutation::Index> phi_;
  std::vector<Permutation::Index> block_;
  std::vector<std::uint8_t> visited_;
  std::vector<int> parent_;
};

}  // namespace belyi
