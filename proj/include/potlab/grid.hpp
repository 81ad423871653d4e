#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace potlab {

// Signed distance style region predicate: negative inside.
using Sdf = std::function<double(std::span<const double>)>;
// Positive weight sampled at cell centers.
using WeightNd = std::function<double(std::span<const double>)>;
using BoundaryFn = std::function<double(std::span<const double>)>;

Sdf sdf_disc(std::vector<double> center, double radius);
Sdf sdf_box(std::vector<double> lo, std::vector<double> hi);
Sdf sdf_union(Sdf a, Sdf b);
Sdf sdf_difference(Sdf a, Sdf b);  // a minus b
Sdf sdf_all();                     // whole box

WeightNd weight_const_nd(double c);
WeightNd weight_radial_pow_nd(double alpha);  // |x|^alpha

// Uniform node lattice over an axis-aligned box with an Omega mask, pinned
// (Dirichlet) nodes and per-cell weight samples. Cells are indexed by their
// lower corner node; the cell at the last node along any axis is unused.
class GridDomain {
 public:
  enum NodeClass : std::uint8_t { Outside = 0, Free = 1, Pinned = 2 };

  // Nodes with omega(x) < 0 are Omega nodes (Free); every non-Omega node
  // adjacent to an Omega node is Pinned to boundary(x). Remaining nodes are
  // Outside and carry no value.
  GridDomain(int dim, std::vector<double> lo, std::vector<double> hi, double h,
             const Sdf& omega, const WeightNd& weight,
             const BoundaryFn& boundary);

  int dim() const { return dim_; }
  double h() const { return h_; }
  std::size_t node_count() const { return node_class_.size(); }
  const std::vector<int>& nodes_per_axis() const { return nodes_; }

  std::size_t index(std::span<const int> multi) const;
  void coords(std::size_t i, std::span<double> x) const;
  std::size_t stride(int axis) const { return stride_[axis]; }

  NodeClass node_class(std::size_t i) const {
    return static_cast<NodeClass>(node_class_[i]);
  }
  bool valued(std::size_t i) const { return node_class_[i] != Outside; }
  double pin_value(std::size_t i) const { return pin_value_[i]; }
  double cell_weight(std::size_t i) const { return cell_weight_[i]; }

  // Nearest lattice node to a physical point.
  std::size_t nearest_node(std::span<const double> x) const;

  void pin_node(std::size_t i, double value);
  // Removes the node from Omega without pinning it: the terms that touch it
  // drop out of the energy (natural internal boundary).
  void void_node(std::size_t i);

  // Pins value on every node inside the region (region(x) <= 0).
  void pin_region(const Sdf& region, double value);

  const std::vector<std::size_t>& free_nodes() const;
  bool has_pinned() const;

 private:
  void invalidate_cache() { free_cache_.clear(); }

  int dim_;
  std::vector<double> lo_, hi_;
  double h_;
  std::vector<int> nodes_;
  std::vector<std::size_t> stride_;
  std::vector<std::uint8_t> node_class_;
  std::vector<double> pin_value_;
  std::vector<double> cell_weight_;
  mutable std::vector<std::size_t> free_cache_;
};

}  // namespace potlab
