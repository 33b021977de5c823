#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schur/engine.hpp"
#include "schur/poly.hpp"
#include "schur/rational.hpp"

namespace schur {

// One grid axis. The steps+1 nodes are the exact rationals
// min + k*(max - min)/steps for k = 0..steps.
struct AxisSpec {
  std::string name;
  Rational min;
  Rational max;
  int steps = 0;
};

[[nodiscard]] Rational axis_node(const AxisSpec& axis, int k);

// Ground truth of a grid cell, decided from the exact coefficient locus.
// Invalid marks nodes where the mapping itself is undefined.
enum class Truth { Stable, Unstable, Boundary, Invalid };

[[nodiscard]] std::string_view truth_name(Truth t);

struct GridSpec {
  AxisSpec x_axis;
  AxisSpec y_axis;
  // One of: "quadratic-alpha-beta" ((x,y) = (alpha,beta) -> x^2 - alpha x
  // + beta), "ricker-ba" ((x,y) = (b,a), fixed r), "coeffs-n2" ((x,y) =
  // (a1,a0)), "coeffs-n3" ((x,y) = (a1,a0), fixed a2 = slice).
  std::string mapping = "quadratic-alpha-beta";
  Backend backend = Backend::exact;
  int max_stages = 3;
  double float_boundary_epsilon = 1e-9;
  // ricker-ba only: growth parameter of the quadratic factor.
  Rational r = Rational(1);
  // coeffs-n3 only: the fixed a2 coefficient of the slice.
  Rational slice = Rational(0);
  // Cells are independent; values above 1 split rows across workers.
  int threads = 1;
};

struct RegionGrid {
  GridSpec spec;
  // Row-major with x fastest: cell (ix, iy) lives at index iy*nx() + ix.
  // Stage is the first certifying stage, -1 when not certified within
  // max_stages (never a claim of instability; see truth_of_cell).
  std::vector<int> stage_of_cell;
  std::vector<Truth> truth_of_cell;

  [[nodiscard]] int nx() const { return spec.x_axis.steps + 1; }
  [[nodiscard]] int ny() const { return spec.y_axis.steps + 1; }
  [[nodiscard]] int stage_at(int ix, int iy) const;
  [[nodiscard]] Truth truth_at(int ix, int iy) const;
};

// Strict stability-triangle conditions for z^2 + a1 z + a0:
// a0 < 1, a0 + a1 > -1, a0 - a1 > -1.
[[nodiscard]] bool c2_membership(const Scalar& a0, const Scalar& a1);

// Strict conditions for z^3 + a2 z^2 + a1 z + a0:
// -1 < a0 < 1, a0^2 - 1 < a0*a2 - a1, |a0 + a2| < 1 + a1.
[[nodiscard]] bool c3_membership(const Scalar& a0, const Scalar& a1, const Scalar& a2);

// Three-way classification from the same conditions: Stable when every
// inequality is strict, Boundary when none is strictly violated but at
// least one holds with equality, Unstable otherwise.
[[nodiscard]] Truth c2_truth(const Scalar& a0, const Scalar& a1);
[[nodiscard]] Truth c3_truth(const Scalar& a0, const Scalar& a1, const Scalar& a2);

// The polynomial the engine runs at one node, in the spec's backend;
// empty when the node is invalid for the mapping (ricker-ba with a = 0).
[[nodiscard]] std::optional<MonicPolynomial> map_point(const GridSpec& spec, const Rational& x,
                                                       const Rational& y);

// Ground truth at one node. Always evaluated in exact arithmetic on the
// exact node, regardless of the spec's engine backend.
[[nodiscard]] Truth map_truth(const GridSpec& spec, const Rational& x, const Rational& y);

[[nodiscard]] RegionGrid scan_region(const GridSpec& spec);

// "x,y,stage,truth" header, then one row per cell, y ascending outer,
// x ascending inner. Coordinates print as exact rationals.
void write_region_csv(const RegionGrid& grid, std::ostream& os);

// Binary P5, maxval 255. Cell byte: 255 invalid, 0 uncertified, else
// 1 + min(stage, 253). Raster rows run top to bottom, so y decreases
// down the image.
void write_region_pgm(const RegionGrid& grid, std::ostream& os);

// Binary P6, same row order. R is the PGM stage byte, G encodes truth
// (Stable 220, Boundary 128, Unstable 32, Invalid 0), B is 255 only on
// invalid cells.
void write_region_ppm(const RegionGrid& grid, std::ostream& os);

// JSON object with the spec echo, counts per stage and per truth, and
// the number of soundness violations (certified cells whose truth is
// not Stable).
[[nodiscard]] std::string region_summary_json(const RegionGrid& grid);

}  // namespace schur
