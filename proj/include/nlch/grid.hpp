#pragma once

#include <array>
#include <memory>
#include <vector>

// Cell-centered uniform rectangular mesh on a product domain (0,Lx) x (0,Ly),
// midpoint quadrature, conservative zero-flux difference operators and the
// discrete Neumann operator (-lap + id) with its inverse.

namespace nlch {

struct Grid {
  int dims = 1;
  std::array<int, 2> cells{1, 1};        // cells[1] == 1 in 1D
  std::array<double, 2> lengths{1.0, 1.0};
  std::array<double, 2> spacing{1.0, 1.0};

  int nx() const { return cells[0]; }
  int ny() const { return cells[1]; }
  long total() const { return static_cast<long>(cells[0]) * cells[1]; }
  double cell_volume() const { return spacing[0] * spacing[1]; }
  double volume() const { return lengths[0] * lengths[1]; }
  double center(int axis, int i) const { return (i + 0.5) * spacing[axis]; }
  bool same_as(const Grid& o) const {
    return dims == o.dims && cells == o.cells && lengths == o.lengths;
  }
};

using GridPtr = std::shared_ptr<const Grid>;

// lengths.size() determines the dimension (1 or 2); cells must match.
GridPtr build_grid(const std::vector<double>& lengths, const std::vector<int>& cells);

struct Field {
  GridPtr grid;
  std::vector<double> v;

  Field() = default;
  explicit Field(GridPtr g, double fill = 0.0)
      : grid(std::move(g)), v(grid->total(), fill) {}

  long size() const { return static_cast<long>(v.size()); }
  double& operator[](long i) { return v[i]; }
  double operator[](long i) const { return v[i]; }
};

// Diffusion coefficients sampled at interior faces, one array per axis.
struct FaceCoefficients {
  GridPtr grid;
  std::vector<double> x;  // (nx-1) * ny
  std::vector<double> y;  // nx * (ny-1); empty in 1D

  FaceCoefficients() = default;
  explicit FaceCoefficients(GridPtr g, double fill = 0.0);
};

void require_same_grid(const Field& a, const Field& b);
void require_finite(const Field& f, const char* what);

// Midpoint-rule integral of f*g over the domain.
double inner_product(const Field& f, const Field& g);
double integral(const Field& f);
double l2_norm(const Field& f);
double max_abs(const Field& f);

// Conservative finite-volume div(coef grad u) with zero-flux boundary faces.
Field apply_divgrad(const FaceCoefficients& coef, const Field& u);

// Divergence of a face flux (x/y arrays like FaceCoefficients), zero on the boundary.
Field divergence_of_face_flux(const FaceCoefficients& flux);

// Solves (-lap_h + id) u = f exactly via diagonalization in the cell-centered
// cosine basis.
Field neumann_inverse(const Field& f);

// ||f||_{V'} = sqrt((f, Ninv f)).
double dual_norm(const Field& f);

// Discrete eigenvalue of -lap_h for mode k along one axis.
double neumann_eigenvalue(const Grid& g, int axis, int k);

// Serial reference implementations, kept as oracles for the OpenMP kernels.
namespace ref {
double inner_product(const Field& f, const Field& g);
Field apply_divgrad(const FaceCoefficients& coef, const Field& u);
}  // namespace ref

}  // namespace nlch
