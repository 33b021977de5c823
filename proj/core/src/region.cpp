#include "schur/region.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "schur/errors.hpp"

namespace schur {

namespace {

using ordered_json = nlohmann::ordered_json;

void require_axis(const AxisSpec& axis) {
  if (axis.steps < 2) throw invalid_input("axis " + axis.name + ": steps must be >= 2");
  if (!(axis.min < axis.max)) throw invalid_input("axis " + axis.name + ": min must be < max");
}

bool known_mapping(const std::string& name) {
  return name == "quadratic-alpha-beta" || name == "ricker-ba" || name == "coeffs-n2" ||
         name == "coeffs-n3";
}

// Exact ascending tail of the mapped polynomial; empty on an invalid node.
std::optional<std::vector<Rational>> exact_tail(const GridSpec& spec, const Rational& x,
                                                const Rational& y) {
  if (spec.mapping == "quadratic-alpha-beta") {
    // x^2 - alpha x + beta with (alpha, beta) = (x, y).
    return std::vector<Rational>{y, -x};
  }
  if (spec.mapping == "ricker-ba") {
    // (b, a) = (x, y); quadratic factor
    // z^2 - (r + 2 - 3t) z + (1 + (a - 3) t + b t^2), t = r/a.
    if (y.is_zero()) return std::nullopt;
    const Rational t = spec.r / y;
    const Rational a1 = -(spec.r + Rational(2) - Rational(3) * t);
    const Rational a0 = Rational(1) + (y - Rational(3)) * t + x * t * t;
    return std::vector<Rational>{a0, a1};
  }
  if (spec.mapping == "coeffs-n2") {
    // (a1, a0) = (x, y) for z^2 + a1 z + a0.
    return std::vector<Rational>{y, x};
  }
  if (spec.mapping == "coeffs-n3") {
    // (a1, a0) = (x, y), a2 fixed by the slice, for z^3 + a2 z^2 + a1 z + a0.
    return std::vector<Rational>{y, x, spec.slice};
  }
  throw invalid_input("unknown mapping: " + spec.mapping);
}

Truth locus_truth(const std::vector<Rational>& tail) {
  if (tail.size() == 2) return c2_truth(Scalar(tail[0]), Scalar(tail[1]));
  if (tail.size() == 3) return c3_truth(Scalar(tail[0]), Scalar(tail[1]), Scalar(tail[2]));
  throw invalid_input("no exact locus for degree " + std::to_string(tail.size()));
}

MonicPolynomial to_backend_poly(const std::vector<Rational>& tail, Backend backend) {
  std::vector<Scalar> coeffs;
  coeffs.reserve(tail.size());
  for (const Rational& c : tail) {
    if (backend == Backend::exact) {
      coeffs.emplace_back(c);
    } else {
      coeffs.emplace_back(Scalar(c.to_double()));
    }
  }
  return MonicPolynomial(coeffs);
}

// Classifies the margins of a strict-conjunction locus: every margin
// positive is Stable, any negative is Unstable, otherwise Boundary.
Truth classify_margins(const std::vector<Scalar>& margins) {
  bool equality = false;
  for (const Scalar& m : margins) {
    const int s = m.sign();
    if (s < 0) return Truth::Unstable;
    if (s == 0) equality = true;
  }
  return equality ? Truth::Boundary : Truth::Stable;
}

std::vector<Scalar> c2_margins(const Scalar& a0, const Scalar& a1) {
  const Scalar one = Scalar::one(a0.backend());
  return {one - a0, a0 + a1 + one, a0 - a1 + one};
}

std::vector<Scalar> c3_margins(const Scalar& a0, const Scalar& a1, const Scalar& a2) {
  const Scalar one = Scalar::one(a0.backend());
  return {a0 + one, one - a0, a0 * a2 - a1 - a0 * a0 + one, one + a1 - (a0 + a2),
          one + a1 + (a0 + a2)};
}

unsigned char stage_byte(int stage, Truth truth) {
  if (truth == Truth::Invalid) return 255;
  if (stage < 0) return 0;
  return static_cast<unsigned char>(1 + std::min(stage, 253));
}

unsigned char truth_byte(Truth truth) {
  switch (truth) {
    case Truth::Stable:
      return 220;
    case Truth::Boundary:
      return 128;
    case Truth::Unstable:
      return 32;
    case Truth::Invalid:
      return 0;
  }
  return 0;
}

}  // namespace

Rational axis_node(const AxisSpec& axis, int k) {
  if (axis.steps < 1) throw invalid_input("axis " + axis.name + ": steps must be >= 1");
  if (k < 0 || k > axis.steps) throw invalid_input("axis node index out of range");
  return axis.min + Rational(k) * (axis.max - axis.min) / Rational(axis.steps);
}

std::string_view truth_name(Truth t) {
  switch (t) {
    case Truth::Stable:
      return "Stable";
    case Truth::Unstable:
      return "Unstable";
    case Truth::Boundary:
      return "Boundary";
    case Truth::Invalid:
      return "Invalid";
  }
  return "Invalid";
}

int RegionGrid::stage_at(int ix, int iy) const {
  return stage_of_cell[static_cast<size_t>(iy) * static_cast<size_t>(nx()) +
                       static_cast<size_t>(ix)];
}

Truth RegionGrid::truth_at(int ix, int iy) const {
  return truth_of_cell[static_cast<size_t>(iy) * static_cast<size_t>(nx()) +
                       static_cast<size_t>(ix)];
}

bool c2_membership(const Scalar& a0, const Scalar& a1) {
  return c2_truth(a0, a1) == Truth::Stable;
}

bool c3_membership(const Scalar& a0, const Scalar& a1, const Scalar& a2) {
  return c3_truth(a0, a1, a2) == Truth::Stable;
}

Truth c2_truth(const Scalar& a0, const Scalar& a1) {
  return classify_margins(c2_margins(a0, a1));
}

Truth c3_truth(const Scalar& a0, const Scalar& a1, const Scalar& a2) {
  return classify_margins(c3_margins(a0, a1, a2));
}

std::optional<MonicPolynomial> map_point(const GridSpec& spec, const Rational& x,
                                         const Rational& y) {
  const auto tail = exact_tail(spec, x, y);
  if (!tail) return std::nullopt;
  return to_backend_poly(*tail, spec.backend);
}

Truth map_truth(const GridSpec& spec, const Rational& x, const Rational& y) {
  const auto tail = exact_tail(spec, x, y);
  if (!tail) return Truth::Invalid;
  return locus_truth(*tail);
}

RegionGrid scan_region(const GridSpec& spec) {
  if (!known_mapping(spec.mapping)) throw invalid_input("unknown mapping: " + spec.mapping);
  require_axis(spec.x_axis);
  require_axis(spec.y_axis);
  if (spec.max_stages < 0) throw invalid_input("max_stages must be >= 0");
  if (spec.threads < 1) throw invalid_input("threads must be >= 1");

  RegionGrid grid;
  grid.spec = spec;
  const int nx = grid.nx();
  const int ny = grid.ny();
  grid.stage_of_cell.assign(static_cast<size_t>(nx) * static_cast<size_t>(ny), -1);
  grid.truth_of_cell.assign(static_cast<size_t>(nx) * static_cast<size_t>(ny), Truth::Invalid);

  std::vector<Rational> xs, ys;
  xs.reserve(static_cast<size_t>(nx));
  ys.reserve(static_cast<size_t>(ny));
  for (int k = 0; k < nx; ++k) xs.push_back(axis_node(spec.x_axis, k));
  for (int k = 0; k < ny; ++k) ys.push_back(axis_node(spec.y_axis, k));

  AlgoConfig cfg;
  cfg.max_stages = spec.max_stages;
  cfg.float_boundary_epsilon = spec.float_boundary_epsilon;

  const auto scan_rows = [&](int iy_begin, int iy_end) {
    for (int iy = iy_begin; iy < iy_end; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        const size_t idx =
            static_cast<size_t>(iy) * static_cast<size_t>(nx) + static_cast<size_t>(ix);
        const auto tail = exact_tail(spec, xs[static_cast<size_t>(ix)],
                                     ys[static_cast<size_t>(iy)]);
        if (!tail) continue;
        grid.truth_of_cell[idx] = locus_truth(*tail);
        const Certificate cert = run_algorithm(to_backend_poly(*tail, spec.backend), cfg);
        if (cert.verdict == Verdict::Certified) grid.stage_of_cell[idx] = *cert.deciding_stage;
      }
    }
  };

  const int workers = std::min(spec.threads, ny);
  if (workers <= 1) {
    scan_rows(0, ny);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      const int begin = ny * w / workers;
      const int end = ny * (w + 1) / workers;
      pool.emplace_back(scan_rows, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }
  return grid;
}

void write_region_csv(const RegionGrid& grid, std::ostream& os) {
  os << "x,y,stage,truth\n";
  for (int iy = 0; iy < grid.ny(); ++iy) {
    const Rational y = axis_node(grid.spec.y_axis, iy);
    for (int ix = 0; ix < grid.nx(); ++ix) {
      const Rational x = axis_node(grid.spec.x_axis, ix);
      os << x.str() << ',' << y.str() << ',' << grid.stage_at(ix, iy) << ','
         << truth_name(grid.truth_at(ix, iy)) << '\n';
    }
  }
}

void write_region_pgm(const RegionGrid& grid, std::ostream& os) {
  os << "P5\n" << grid.nx() << ' ' << grid.ny() << "\n255\n";
  std::vector<unsigned char> row(static_cast<size_t>(grid.nx()));
  for (int iy = grid.ny() - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < grid.nx(); ++ix) {
      row[static_cast<size_t>(ix)] = stage_byte(grid.stage_at(ix, iy), grid.truth_at(ix, iy));
    }
    os.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
}

void write_region_ppm(const RegionGrid& grid, std::ostream& os) {
  os << "P6\n" << grid.nx() << ' ' << grid.ny() << "\n255\n";
  std::vector<unsigned char> row(static_cast<size_t>(grid.nx()) * 3);
  for (int iy = grid.ny() - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < grid.nx(); ++ix) {
      const Truth truth = grid.truth_at(ix, iy);
      row[static_cast<size_t>(ix) * 3] = stage_byte(grid.stage_at(ix, iy), truth);
      row[static_cast<size_t>(ix) * 3 + 1] = truth_byte(truth);
      row[static_cast<size_t>(ix) * 3 + 2] = truth == Truth::Invalid ? 255 : 0;
    }
    os.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
}

std::string region_summary_json(const RegionGrid& grid) {
  std::map<int, long> stage_counts;
  std::map<Truth, long> truth_counts;
  long certified = 0;
  long violations = 0;
  const size_t cells = grid.stage_of_cell.size();
  for (size_t i = 0; i < cells; ++i) {
    const int stage = grid.stage_of_cell[i];
    const Truth truth = grid.truth_of_cell[i];
    ++stage_counts[stage];
    ++truth_counts[truth];
    if (stage >= 0) {
      ++certified;
      if (truth != Truth::Stable) ++violations;
    }
  }

  const auto axis_json = [](const AxisSpec& axis) {
    ordered_json j;
    j["name"] = axis.name;
    j["min"] = axis.min.str();
    j["max"] = axis.max.str();
    j["steps"] = axis.steps;
    return j;
  };

  ordered_json j;
  j["mapping"] = grid.spec.mapping;
  j["backend"] = std::string(backend_name(grid.spec.backend));
  j["max_stages"] = grid.spec.max_stages;
  j["x_axis"] = axis_json(grid.spec.x_axis);
  j["y_axis"] = axis_json(grid.spec.y_axis);
  if (grid.spec.mapping == "ricker-ba") j["r"] = grid.spec.r.str();
  if (grid.spec.mapping == "coeffs-n3") j["slice_a2"] = grid.spec.slice.str();
  j["cells"] = cells;
  j["certified_cells"] = certified;
  ordered_json stages = ordered_json::object();
  for (const auto& [stage, count] : stage_counts) stages[std::to_string(stage)] = count;
  j["stage_counts"] = stages;
  ordered_json truths = ordered_json::object();
  for (const auto& [truth, count] : truth_counts) truths[std::string(truth_name(truth))] = count;
  j["truth_counts"] = truths;
  j["soundness_violations"] = violations;
  return j.dump(2);
}

}  // namespace schur
