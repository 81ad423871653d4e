#include "potlab/grid.hpp"

#include <algorithm>
#include <cmath>

#include "potlab/errors.hpp"

namespace potlab {

Sdf sdf_disc(std::vector<double> center, double radius) {
  return [center = std::move(center), radius](std::span<const double> x) {
    double r2 = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - center[i];
      r2 += d * d;
    }
    return std::sqrt(r2) - radius;
  };
}

Sdf sdf_box(std::vector<double> lo, std::vector<double> hi) {
  return [lo = std::move(lo), hi = std::move(hi)](std::span<const double> x) {
    double d = -1e300;
    for (size_t i = 0; i < x.size(); ++i) {
      d = std::max(d, std::max(lo[i] - x[i], x[i] - hi[i]));
    }
    return d;
  };
}

Sdf sdf_union(Sdf a, Sdf b) {
  return [a = std::move(a), b = std::move(b)](std::span<const double> x) {
    return std::min(a(x), b(x));
  };
}

Sdf sdf_difference(Sdf a, Sdf b) {
  return [a = std::move(a), b = std::move(b)](std::span<const double> x) {
    return std::max(a(x), -b(x));
  };
}

Sdf sdf_all() {
  return [](std::span<const double>) { return -1.0; };
}

WeightNd weight_const_nd(double c) {
  return [c](std::span<const double>) { return c; };
}

WeightNd weight_radial_pow_nd(double alpha) {
  return [alpha](std::span<const double> x) {
    double r2 = 0.0;
    for (double xi : x) r2 += xi * xi;
    return std::pow(std::sqrt(r2), alpha);
  };
}

GridDomain::GridDomain(int dim, std::vector<double> lo, std::vector<double> hi,
                       double h, const Sdf& omega, const WeightNd& weight,
                       const BoundaryFn& boundary)
    : dim_(dim), lo_(std::move(lo)), hi_(std::move(hi)), h_(h) {
  if (dim < 1 || dim > 4) throw InputError("GridDomain: dim must be 1..4");
  if (!(h > 0.0)) throw InputError("GridDomain: h must be positive");
  nodes_.resize(dim);
  stride_.resize(dim);
  std::size_t total = 1;
  for (int a = 0; a < dim; ++a) {
    const double span = hi_[a] - lo_[a];
    if (!(span > 0.0)) throw InputError("GridDomain: box must be nondegenerate");
    nodes_[a] = static_cast<int>(std::lround(span / h)) + 1;
    if (nodes_[a] < 2) throw InputError("GridDomain: too coarse along an axis");
  }
  for (int a = 0; a < dim; ++a) {
    stride_[a] = total;
    total *= static_cast<std::size_t>(nodes_[a]);
  }
  node_class_.assign(total, Outside);
  pin_value_.assign(total, 0.0);
  cell_weight_.assign(total, 1.0);

  std::vector<double> x(dim);
  for (std::size_t i = 0; i < total; ++i) {
    coords(i, x);
    if (omega(x) < 0.0) node_class_[i] = Free;
  }
  // Pin non-Omega nodes adjacent to an Omega node to the boundary value.
  std::vector<int> multi(dim);
  for (std::size_t i = 0; i < total; ++i) {
    if (node_class_[i] != Free) continue;
    std::size_t rem = i;
    for (int a = 0; a < dim; ++a) {
      multi[a] = static_cast<int>(rem % nodes_[a]);
      rem /= nodes_[a];
    }
    for (int a = 0; a < dim; ++a) {
      for (int s = -1; s <= 1; s += 2) {
        const int na = multi[a] + s;
        if (na < 0 || na >= nodes_[a]) continue;
        const std::size_t j = (s > 0) ? i + stride_[a] : i - stride_[a];
        if (node_class_[j] == Outside) {
          coords(j, x);
          node_class_[j] = Pinned;
          pin_value_[j] = boundary(x);
        }
      }
    }
  }
  // Weight at cell centers.
  for (std::size_t i = 0; i < total; ++i) {
    coords(i, x);
    bool interior_cell = true;
    std::size_t rem = i;
    for (int a = 0; a < dim; ++a) {
      const int ia = static_cast<int>(rem % nodes_[a]);
      rem /= nodes_[a];
      if (ia + 1 >= nodes_[a]) interior_cell = false;
      x[a] += 0.5 * h_;
    }
    if (interior_cell) {
      const double w = weight(x);
      if (!(w > 0.0)) throw InputError("GridDomain: weight samples must be positive");
      cell_weight_[i] = w;
    }
  }
}

std::size_t GridDomain::index(std::span<const int> multi) const {
  std::size_t i = 0;
  for (int a = 0; a < dim_; ++a) {
    i += static_cast<std::size_t>(multi[a]) * stride_[a];
  }
  return i;
}

void GridDomain::coords(std::size_t i, std::span<double> x) const {
  std::size_t rem = i;
  for (int a = 0; a < dim_; ++a) {
    const int ia = static_cast<int>(rem % nodes_[a]);
    rem /= nodes_[a];
    x[a] = lo_[a] + ia * h_;
  }
}

std::size_t GridDomain::nearest_node(std::span<const double> x) const {
  std::size_t i = 0;
  for (int a = 0; a < dim_; ++a) {
    int ia = static_cast<int>(std::lround((x[a] - lo_[a]) / h_));
    ia = std::clamp(ia, 0, nodes_[a] - 1);
    i += static_cast<std::size_t>(ia) * stride_[a];
  }
  return i;
}

void GridDomain::pin_node(std::size_t i, double value) {
  node_class_[i] = Pinned;
  pin_value_[i] = value;
  invalidate_cache();
}

void GridDomain::void_node(std::size_t i) {
  node_class_[i] = Outside;
  pin_value_[i] = 0.0;
  invalidate_cache();
}

void GridDomain::pin_region(const Sdf& region, double value) {
  std::vector<double> x(dim_);
  for (std::size_t i = 0; i < node_count(); ++i) {
    if (node_class_[i] == Outside) continue;
    coords(i, x);
    if (region(x) <= 0.0) {
      node_class_[i] = Pinned;
      pin_value_[i] = value;
    }
  }
  invalidate_cache();
}

const std::vector<std::size_t>& GridDomain::free_nodes() const {
  if (free_cache_.empty()) {
    for (std::size_t i = 0; i < node_count(); ++i) {
      if (node_class_[i] == Free) free_cache_.push_back(i);
    }
  }
  return free_cache_;
}

bool GridDomain::has_pinned() const {
  return std::any_of(node_class_.begin(), node_class_.end(),
                     [](std::uint8_t c) { return c == Pinned; });
}

}  // namespace potlab
