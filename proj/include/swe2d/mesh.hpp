#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace swe {

struct Vertex {
  double x = 0.0;
  double y = 0.0;
};

/// Geometry of local edge k of a triangle. Edge k joins vertex k and vertex (k+1)%3
/// of the cell's (counter-clockwise) vertex list.
struct EdgeGeometry {
  double length = 0.0;  ///< edge length d_jk
  double nx = 0.0;      ///< outward unit normal (cos of the edge angle)
  double ny = 0.0;      ///< outward unit normal (sin of the edge angle)
  double mx = 0.0;      ///< edge midpoint
  double my = 0.0;
  int neighbor = -1;       ///< adjacent cell id, -1 on the boundary
  int boundary_tag = -1;   ///< index into Mesh::boundary_tags(), -1 for interior edges
  int boundary_slot = -1;  ///< index into Mesh::boundary_edges(), -1 for interior edges
};

struct CellGeometry {
  double area = 0.0;
  double cx = 0.0;  ///< centroid
  double cy = 0.0;
  double inradius = 0.0;  ///< 2*area/perimeter, the time-step length scale
  std::array<EdgeGeometry, 3> edge{};
};

/// One unique mesh edge. For interior edges the stored orientation is the outward
/// normal of cell_in; cell_out sees the same edge with the normal negated.
struct MeshEdge {
  int cell_in = -1;
  int k_in = -1;
  int cell_out = -1;  ///< -1 for boundary edges
  int k_out = -1;
};

struct BoundaryEdgeRef {
  int cell = -1;
  int k = -1;
  int tag = -1;
};

enum class DiagonalPattern { uniform, alternating };

/// Conforming triangular mesh with per-vertex bottom elevation.
///
/// Construction normalizes every cell to counter-clockwise vertex order, builds the
/// edge/neighbor topology, classifies boundary edges, and precomputes cell geometry.
/// Throws std::runtime_error on non-conforming input (an edge shared by more than two
/// cells), out-of-range vertex indices, non-finite coordinates, or zero-area cells.
class Mesh {
public:
  /// `boundary_tags` entries are (cell, local edge, tag label) given in the *input*
  /// vertex ordering; they are remapped if a cell gets flipped to counter-clockwise.
  /// Untagged boundary edges are classified against the bounding box as
  /// "left"/"right"/"bottom"/"top", with "boundary" as the fallback label.
  Mesh(std::vector<Vertex> vertices, std::vector<std::array<int, 3>> cells,
       std::vector<double> vertex_b = {},
       const std::vector<std::tuple<int, int, std::string>>& boundary_tags = {});

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_cells() const { return static_cast<int>(cells_.size()); }

  const Vertex& vertex(int v) const { return vertices_[v]; }
  double vertex_b(int v) const { return vertex_b_[v]; }
  const std::vector<double>& vertex_b() const { return vertex_b_; }
  const std::array<int, 3>& cell(int c) const { return cells_[c]; }
  const CellGeometry& geometry(int c) const { return geom_[c]; }

  const std::vector<MeshEdge>& edges() const { return edges_; }
  const std::vector<BoundaryEdgeRef>& boundary_edges() const { return boundary_edges_; }
  const std::vector<std::string>& boundary_tags() const { return tag_labels_; }

  double total_area() const { return total_area_; }
  double max_cell_area() const { return max_cell_area_; }
  double min_inradius() const { return min_inradius_; }

  /// Bounding box as (xmin, xmax, ymin, ymax).
  std::array<double, 4> bounding_box() const { return bbox_; }

private:
  std::vector<Vertex> vertices_;
  std::vector<std::array<int, 3>> cells_;
  std::vector<double> vertex_b_;
  std::vector<CellGeometry> geom_;
  std::vector<MeshEdge> edges_;
  std::vector<BoundaryEdgeRef> boundary_edges_;
  std::vector<std::string> tag_labels_;
  std::array<double, 4> bbox_{};
  double total_area_ = 0.0;
  double max_cell_area_ = 0.0;
  double min_inradius_ = 0.0;
};

/// Structured triangulation of [x0,x1]x[y0,y1] with nx*ny rectangles, each split
/// into two triangles. `uniform` uses the same diagonal everywhere; `alternating`
/// flips the diagonal in a checkerboard to avoid directional bias. Bottom elevation
/// is initialized to zero. Boundary edges get tags left/right/bottom/top.
Mesh generate_rect_mesh(double x0, double x1, double y0, double y1, int nx, int ny,
                        DiagonalPattern pattern = DiagonalPattern::alternating);

/// Text format:
///   # comment lines and blank lines are ignored
///   NV NT
///   x y B          (NV vertex lines)
///   i1 i2 i3       (NT cell lines, zero-based vertex ids)
///   boundary       (optional section)
///   cell edge tag  (one line per tagged boundary edge)
Mesh load_mesh(const std::string& path);
void save_mesh(const Mesh& mesh, const std::string& path);

/// Deterministic point location: scans cells in ascending id order and returns the
/// first whose closed triangle contains (x, y); nullopt if the point is outside.
std::optional<int> locate_cell(const Mesh& mesh, double x, double y);

}  // namespace swe
