// Uniform 1D/2D grids, ghost-layered fields and boundary fills.
#pragma once

#include <array>
#include <optional>

#include <Eigen/Core>

namespace weno {

enum class Centering { Node, Cell };

/// Uniform grid on [a, b] split into n_cells intervals.
///
/// Node centering places point i at a + i*dx, cell centering at a + (i + 1/2)*dx.
/// The same formula extends to ghost indices (i < 0 or i >= n_cells).
struct Grid1D {
  double a = 0.0;
  double b = 1.0;
  int n_cells = 0;
  double dx = 0.0;
  Centering centering = Centering::Cell;
  int n_ghost = 3;

  double x(int i) const {
    return centering == Centering::Node ? a + i * dx : a + (i + 0.5) * dx;
  }
};

struct Grid2D {
  Grid1D x;
  Grid1D y;
};

Grid1D build_grid(double a, double b, int n_cells, Centering centering, int n_ghost = 3);
Grid2D build_grid_2d(double ax, double bx, int nx, double ay, double by, int ny, int n_ghost = 3);

enum class BoundaryKind { Periodic, ZeroGradient, ReflectiveWall, DmrBottom, DmrTop };
enum class Side { Left = 0, Right = 1, Bottom = 2, Top = 3 };

/// Oblique-shock data for the double Mach reflection boundaries.
struct DmrParameters {
  double x0 = 1.0 / 6.0;
  double shock_speed = 10.0;
  Eigen::VectorXd post_shock;  // conserved
  Eigen::VectorXd pre_shock;   // conserved

  /// Abscissa of the 60-degree shock line at height y and time t.
  double shock_x(double t, double y) const;
};

struct BoundarySpec {
  std::array<BoundaryKind, 4> kind{BoundaryKind::ZeroGradient, BoundaryKind::ZeroGradient,
                                   BoundaryKind::ZeroGradient, BoundaryKind::ZeroGradient};
  std::optional<DmrParameters> dmr;

  BoundaryKind operator[](Side s) const { return kind[static_cast<int>(s)]; }

  static BoundarySpec uniform(BoundaryKind k);
  /// Throws std::invalid_argument on a one-sided periodic pair or missing DMR data.
  void validate() const;
};

/// Cell data with ghost layers, stored component-major: column i + n_ghost holds cell i.
struct Field1D {
  int components = 1;
  int n = 0;
  int n_ghost = 3;
  Eigen::ArrayXXd data;

  Field1D() = default;
  Field1D(int components, int n, int n_ghost)
      : components(components), n(n), n_ghost(n_ghost), data(Eigen::ArrayXXd::Zero(components, n + 2 * n_ghost)) {}

  static Field1D from_interior(const Eigen::Ref<const Eigen::ArrayXXd>& interior, int n_ghost);

  auto cell(int i) { return data.col(i + n_ghost); }
  auto cell(int i) const { return data.col(i + n_ghost); }
  auto interior() { return data.middleCols(n_ghost, n); }
  auto interior() const { return data.middleCols(n_ghost, n); }
};

/// 2D analogue of Field1D; cell (i, j) lives in column (j + g) * (nx + 2g) + (i + g).
struct Field2D {
  int components = 1;
  int nx = 0;
  int ny = 0;
  int n_ghost = 3;
  Eigen::ArrayXXd data;

  Field2D() = default;
  Field2D(int components, int nx, int ny, int n_ghost)
      : components(components), nx(nx), ny(ny), n_ghost(n_ghost),
        data(Eigen::ArrayXXd::Zero(components, (nx + 2 * n_ghost) * (ny + 2 * n_ghost))) {}

  /// `interior` packs cell (i, j) in column j * nx + i.
  static Field2D from_interior(const Eigen::Ref<const Eigen::ArrayXXd>& interior, int nx, int ny, int n_ghost);
  Eigen::ArrayXXd interior() const;

  int stride() const { return nx + 2 * n_ghost; }
  int column(int i, int j) const { return (j + n_ghost) * stride() + (i + n_ghost); }
  auto cell(int i, int j) { return data.col(column(i, j)); }
  auto cell(int i, int j) const { return data.col(column(i, j)); }
};

/// Populates every ghost cell of `field` according to `bc` at time t.
///
/// Reflective walls and the DMR bottom negate the wall-normal momentum, which is
/// component 1 for x-walls and component 2 for y-walls; they require a system field.
void fill_ghosts(Field1D& field, const Grid1D& grid, const BoundarySpec& bc, double t);
void fill_ghosts(Field2D& field, const Grid2D& grid, const BoundarySpec& bc, double t);

}  // namespace weno
