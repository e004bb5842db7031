#include "weno/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace weno {

Grid1D build_grid(double a, double b, int n_cells, Centering centering, int n_ghost) {
  if (n_cells <= 0) throw std::invalid_argument("build_grid: cell count must be positive");
  if (!(b > a)) throw std::invalid_argument("build_grid: need b > a");
  if (n_cells < 5) throw std::invalid_argument("build_grid: a five-point stencil needs at least 5 cells");
  if (n_ghost < 3) throw std::invalid_argument("build_grid: at least 3 ghost layers are required");
  return Grid1D{a, b, n_cells, (b - a) / n_cells, centering, n_ghost};
}

Grid2D build_grid_2d(double ax, double bx, int nx, double ay, double by, int ny, int n_ghost) {
  return Grid2D{build_grid(ax, bx, nx, Centering::Cell, n_ghost), build_grid(ay, by, ny, Centering::Cell, n_ghost)};
}

double DmrParameters::shock_x(double t, double y) const {
  // Normal speed v_s on a line inclined 60 degrees to the x-axis moves the
  // x-intercept at v_s / sin(60) = 2 v_s / sqrt(3).
  const double sqrt3 = std::sqrt(3.0);
  return x0 + (y + 2.0 * shock_speed * t) / sqrt3;
}

BoundarySpec BoundarySpec::uniform(BoundaryKind k) {
  BoundarySpec bc;
  bc.kind.fill(k);
  return bc;
}

void BoundarySpec::validate() const {
  const auto periodic = [&](Side s) { return (*this)[s] == BoundaryKind::Periodic; };
  if (periodic(Side::Left) != periodic(Side::Right) || periodic(Side::Bottom) != periodic(Side::Top))
    throw std::invalid_argument("BoundarySpec: periodic must be set on both opposing sides or neither");
  for (auto k : kind) {
    if ((k == BoundaryKind::DmrBottom || k == BoundaryKind::DmrTop) && !dmr)
      throw std::invalid_argument("BoundarySpec: DMR boundary without shock parameters");
  }
}

Field1D Field1D::from_interior(const Eigen::Ref<const Eigen::ArrayXXd>& interior, int n_ghost) {
  Field1D f(static_cast<int>(interior.rows()), static_cast<int>(interior.cols()), n_ghost);
  f.interior() = interior;
  return f;
}

Field2D Field2D::from_interior(const Eigen::Ref<const Eigen::ArrayXXd>& interior, int nx, int ny, int n_ghost) {
  if (interior.cols() != static_cast<Eigen::Index>(nx) * ny)
    throw std::invalid_argument("Field2D::from_interior: size mismatch");
  Field2D f(static_cast<int>(interior.rows()), nx, ny, n_ghost);
  for (int j = 0; j < ny; ++j)
    f.data.middleCols(f.column(0, j), nx) = interior.middleCols(static_cast<Eigen::Index>(j) * nx, nx);
  return f;
}

Eigen::ArrayXXd Field2D::interior() const {
  Eigen::ArrayXXd out(components, static_cast<Eigen::Index>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    out.middleCols(static_cast<Eigen::Index>(j) * nx, nx) = data.middleCols(column(0, j), nx);
  return out;
}

namespace {

[[noreturn]] void unknown_kind() { throw std::invalid_argument("fill_ghosts: unknown boundary kind"); }

void require_momentum(int components, int normal) {
  if (normal >= components)
    throw std::invalid_argument("fill_ghosts: reflective wall needs a velocity component (scalar field given)");
}

// Fills the ghosts of a strided line of cells. `at(i)` returns the column for
// cell i of the line (i may be a ghost index); `coord(i)` its abscissa along the line.
template <typename At>
void fill_line_side(At&& at, int n, int g, BoundaryKind kind, bool low_side, int normal, int components) {
  for (int k = 0; k < g; ++k) {
    const int ghost = low_side ? -1 - k : n + k;
    switch (kind) {
      case BoundaryKind::Periodic:
        at(ghost) = at(low_side ? n - 1 - k : k);
        break;
      case BoundaryKind::ZeroGradient:
        at(ghost) = at(low_side ? 0 : n - 1);
        break;
      case BoundaryKind::ReflectiveWall: {
        require_momentum(components, normal);
        at(ghost) = at(low_side ? k : n - 1 - k);
        at(ghost)(normal) = -at(ghost)(normal);
        break;
      }
      default:
        unknown_kind();
    }
  }
}

}  // namespace

void fill_ghosts(Field1D& field, const Grid1D& grid, const BoundarySpec& bc, double t) {
  (void)t;
  bc.validate();
  if (field.n != grid.n_cells) throw std::invalid_argument("fill_ghosts: field does not match grid");
  const auto at = [&](int i) { return field.cell(i); };
  fill_line_side(at, field.n, field.n_ghost, bc[Side::Left], true, 1, field.components);
  fill_line_side(at, field.n, field.n_ghost, bc[Side::Right], false, 1, field.components);
}

void fill_ghosts(Field2D& field, const Grid2D& grid, const BoundarySpec& bc, double t) {
  bc.validate();
  if (field.nx != grid.x.n_cells || field.ny != grid.y.n_cells)
    throw std::invalid_argument("fill_ghosts: field does not match grid");
  const int g = field.n_ghost;

  // x-ghosts on interior rows first, then y-ghosts over full (ghost-extended) columns.
  for (int j = 0; j < field.ny; ++j) {
    const auto at = [&](int i) { return field.cell(i, j); };
    for (Side s : {Side::Left, Side::Right}) {
      const BoundaryKind kind = bc[s];
      if (kind == BoundaryKind::DmrBottom || kind == BoundaryKind::DmrTop) unknown_kind();
      fill_line_side(at, field.nx, g, kind, s == Side::Left, 1, field.components);
    }
  }

  for (int i = -g; i < field.nx + g; ++i) {
    const auto at = [&](int j) { return field.cell(i, j); };
    const double xc = grid.x.x(i);
    for (Side s : {Side::Bottom, Side::Top}) {
      const bool low = s == Side::Bottom;
      switch (bc[s]) {
        case BoundaryKind::DmrBottom:
          if (xc < bc.dmr->x0) {
            for (int k = 0; k < g; ++k) at(-1 - k) = bc.dmr->post_shock.array();
          } else {
            fill_line_side(at, field.ny, g, BoundaryKind::ReflectiveWall, true, 2, field.components);
          }
          break;
        case BoundaryKind::DmrTop: {
          const double xs = bc.dmr->shock_x(t, grid.y.b);
          for (int k = 0; k < g; ++k)
            at(field.ny + k) = (xc < xs ? bc.dmr->post_shock : bc.dmr->pre_shock).array();
          break;
        }
        default:
          fill_line_side(at, field.ny, g, bc[s], low, 2, field.components);
      }
    }
  }
}

}  // namespace weno
