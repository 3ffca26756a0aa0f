#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pgreen {

/// Sorted, duplicate-free set of vertex indices.  All set-valued results in
/// the library are returned in ascending order so runs are deterministic.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> indices);

  static VertexSet all(int vertex_count);
  static VertexSet single(int v);

  bool contains(int v) const;
  int size() const { return static_cast<int>(idx_.size()); }
  bool empty() const { return idx_.empty(); }
  const std::vector<int>& indices() const { return idx_; }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  int operator[](int k) const { return idx_[k]; }

  VertexSet unite(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  VertexSet subtract(const VertexSet& other) const;
  bool subset_of(const VertexSet& other) const;

  bool operator==(const VertexSet& other) const = default;

 private:
  std::vector<int> idx_;
};

/// Radial weight w(r): constant, power law w(r) = scale * r^exponent, or a
/// piecewise-linear table of (radius, value) samples.
struct WeightSpec {
  enum class Kind { constant, power, table };

  Kind kind = Kind::constant;
  double scale = 1.0;
  double exponent = 0.0;
  std::vector<double> radii;   // table only, ascending
  std::vector<double> values;  // table only, positive

  double radial(double r) const;
  bool is_power_law() const { return kind != Kind::table; }
  std::string describe() const;

  static WeightSpec constant(double c);
  static WeightSpec power(double coeff, double expo);
  static WeightSpec table(std::vector<double> radii, std::vector<double> values);
  // "const:1", "power:2:-0.5"
  static WeightSpec parse(const std::string& text);
};

struct Edge {
  int i = 0, j = 0;        // i < j
  double length = 1.0;     // ℓ_ij > 0
  double conductance = 1.0;  // c_ij > 0
};

struct Neighbor {
  int vertex;
  int edge;  // index into edges()
};

/// Finite connected weighted graph playing the role of the metric measure
/// space: per-vertex masses, per-edge lengths (the metric) and conductances
/// (the energy weights), and the fixed exponent p in (1, inf).
/// Immutable after construction; safe for shared concurrent reads.
class WeightedGraphSpace {
 public:
  WeightedGraphSpace(double p, std::vector<double> measures, std::vector<Edge> edges,
                     std::vector<double> coordinates = {}, int coordinate_dim = 0,
                     std::optional<double> grid_spacing = std::nullopt);

  int vertex_count() const { return static_cast<int>(measures_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  double p() const { return p_; }

  double measure(int v) const { return measures_[v]; }
  std::span<const double> measures() const { return measures_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(int v) const;

  bool has_coordinates() const { return coord_dim_ > 0; }
  int coordinate_dim() const { return coord_dim_; }
  std::span<const double> coordinate(int v) const;

  /// Lattice spacing when the space was built by build_grid.
  std::optional<double> grid_spacing() const { return grid_spacing_; }
  double min_edge_length() const { return min_edge_length_; }
  /// Half-width used to slice discrete spheres: h/2 on grids, half the
  /// shortest edge otherwise.
  double sphere_halfwidth() const;

  void check_vertex(int v, const char* what) const;
  void check_set(const VertexSet& s, const char* what) const;

 private:
  double p_;
  std::vector<double> measures_;
  std::vector<Edge> edges_;
  std::vector<double> coords_;
  int coord_dim_ = 0;
  std::optional<double> grid_spacing_;
  double min_edge_length_ = 0.0;
  // CSR adjacency
  std::vector<int> adj_offsets_;
  std::vector<Neighbor> adj_;
};

struct GridSpec {
  std::vector<double> lo, hi;  // box corners, lo[k] < hi[k]
  double h = 0.0;
  WeightSpec weight = WeightSpec::constant(1.0);
  std::vector<double> weight_center;  // empty: box centre
  double p = 2.0;
};

/// Lattice discretization of a weighted box: vertices at spacing h, 2n-neighbor
/// edges of length h, vertex measure w(x) h^n, and conductance
/// ((w(x_i)+w(x_j))/2) h^(n-p) so the edge energy sums approximate the
/// continuum weighted p-energy.
WeightedGraphSpace build_grid(const GridSpec& spec);

WeightedGraphSpace build_path(std::span<const double> conductances,
                              std::span<const double> lengths,
                              std::span<const double> measures, double p);
/// Path with unit lengths and measures.
WeightedGraphSpace build_path(std::span<const double> conductances, double p);

/// Shortest-path distances over edge lengths from `center` to every vertex.
std::vector<double> shortest_path_distances(const WeightedGraphSpace& space, int center);

/// Open ball {d(center, .) < r}; closed ball {d <= r} when `closed` is set.
VertexSet metric_ball(const WeightedGraphSpace& space, int center, double r,
                      bool closed = false);

/// Vertices outside omega with an edge into omega.  Empty when omega covers
/// the whole space (callers treat that as the no-singular-function
/// obstruction).
VertexSet boundary_of(const WeightedGraphSpace& space, const VertexSet& omega);

/// Discrete sphere: metric_ball(r + halfwidth) minus metric_ball(r - halfwidth).
/// halfwidth < 0 selects the space's default sphere_halfwidth().
VertexSet sphere_shell(const WeightedGraphSpace& space, int center, double r,
                       double halfwidth = -1.0);

VertexSet complement(const WeightedGraphSpace& space, const VertexSet& s);

/// Induced subgraph on `s` is connected (empty and singleton count as connected).
bool is_connected_within(const WeightedGraphSpace& space, const VertexSet& s);

}  // namespace pgreen
