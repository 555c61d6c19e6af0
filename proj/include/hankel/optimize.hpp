#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hankel/bounds.hpp"
#include "hankel/parallel.hpp"

namespace hankel {

/// Extremal |H3| must match the verified maximum this closely.
inline constexpr double kSharpnessTolerance = 1e-6;

/// A deterministic objective, total on the closed cuboid.
struct ScalarField {
  std::function<double(const CuboidPoint&)> evaluator;
  std::string label;
};

inline ScalarField star_surrogate_field() {
  return ScalarField{[](const CuboidPoint& pt) { return surrogate_star(pt); }, "star"};
}

inline ScalarField qstar_surrogate_field(QParameter q) {
  return ScalarField{[q](const CuboidPoint& pt) { return surrogate_qstar(pt, q); }, "qstar"};
}

inline ScalarField field_for(const ClassTag& tag) {
  return tag.kind() == ClassKind::Star ? star_surrogate_field()
                                       : qstar_surrogate_field(tag.q());
}

/// Axis-aligned sub-box of the cuboid; equal bounds pin a coordinate.
struct Box {
  std::array<double, 3> lo{0.0, 0.0, 0.0};
  std::array<double, 3> hi{2.0, 1.0, 1.0};
};

inline Box full_cuboid() { return Box{}; }

struct GridResult {
  double value;
  CuboidPoint point;
};

namespace detail {

inline bool lex_less(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

/// Running maximum with a canonical tie-break: larger value wins, equal
/// values go to the lexicographically smallest (p,x,y). This makes every
/// scan independent of evaluation order and worker count.
struct Incumbent {
  double value = -std::numeric_limits<double>::infinity();
  std::array<double, 3> point{0.0, 0.0, 0.0};
  bool valid = false;

  void offer(double v, const std::array<double, 3>& pt) {
    if (!valid || v > value || (v == value && lex_less(pt, point))) {
      value = v;
      point = pt;
      valid = true;
    }
  }
  void offer(const Incumbent& other) {
    if (other.valid) offer(other.value, other.point);
  }
};

inline double lattice_coord(double lo, double hi, int k, int n) {
  if (k == n) return hi;  // exact upper endpoint
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n);
}

inline CuboidPoint to_point(const std::array<double, 3>& a) {
  return CuboidPoint(a[0], a[1], a[2]);
}

/// Lattice scan of a box with count[i] samples per axis, parallel over the
/// first axis. Chunks merge in slab order, so the incumbent is identical for
/// any worker count.
inline Incumbent scan_box(const ScalarField& field, const Box& box,
                          const std::array<int, 3>& counts) {
  auto chunk = [&](std::size_t begin, std::size_t end) {
    Incumbent local;
    std::array<double, 3> pt{};
    for (std::size_t i = begin; i < end; ++i) {
      pt[0] = lattice_coord(box.lo[0], box.hi[0], static_cast<int>(i), counts[0] - 1);
      for (int j = 0; j < counts[1]; ++j) {
        pt[1] = lattice_coord(box.lo[1], box.hi[1], j, counts[1] - 1);
        for (int k = 0; k < counts[2]; ++k) {
          pt[2] = lattice_coord(box.lo[2], box.hi[2], k, counts[2] - 1);
          local.offer(field.evaluator(to_point(pt)), pt);
        }
      }
    }
    return local;
  };
  auto merge = [](Incumbent a, const Incumbent& b) {
    a.offer(b);
    return a;
  };
  return parallel_reduce<Incumbent>(static_cast<std::size_t>(counts[0]), chunk, merge);
}

inline std::array<int, 3> box_counts(const Box& box, int per_axis) {
  std::array<int, 3> counts;
  for (int i = 0; i < 3; ++i) counts[i] = (box.hi[i] > box.lo[i]) ? per_axis : 1;
  return counts;
}

}  // namespace detail

/// Maximum over the uniform (resolution+1)^d lattice of the box (boundary
/// planes included); d is the number of non-pinned axes.
inline GridResult grid_max_in(const ScalarField& field, const Box& box, int resolution) {
  assert(resolution >= 2);
  const detail::Incumbent best = detail::scan_box(field, box, detail::box_counts(box, resolution + 1));
  return GridResult{best.value, detail::to_point(best.point)};
}

inline GridResult grid_max(const ScalarField& field, int resolution) {
  return grid_max_in(field, full_cuboid(), resolution);
}

/// Shrinking-box local search: center a sub-box on the incumbent, halve its
/// sides each round (clipped to the domain box), 9 samples per free axis.
/// The incumbent value never decreases.
inline GridResult refine_max_in(const ScalarField& field, const Box& box,
                                const CuboidPoint& start, int shrink_rounds) {
  std::array<double, 3> side;
  for (int i = 0; i < 3; ++i) side[i] = box.hi[i] - box.lo[i];

  detail::Incumbent best;
  const std::array<double, 3> s0{start.p, start.x, start.y};
  best.offer(field.evaluator(start), s0);

  for (int round = 0; round < shrink_rounds; ++round) {
    Box sub;
    for (int i = 0; i < 3; ++i) {
      side[i] *= 0.5;
      sub.lo[i] = std::max(box.lo[i], best.point[i] - side[i] * 0.5);
      sub.hi[i] = std::min(box.hi[i], best.point[i] + side[i] * 0.5);
    }
    const double before = best.value;
    best.offer(detail::scan_box(field, sub, detail::box_counts(sub, 9)));
    assert(best.value >= before);
    (void)before;
  }
  return GridResult{best.value, detail::to_point(best.point)};
}

inline GridResult refine_max(const ScalarField& field, const CuboidPoint& start,
                             int shrink_rounds) {
  return refine_max_in(field, full_cuboid(), start, shrink_rounds);
}

/// One boundary element (face or edge) of the cuboid with its located
/// maximum.
struct FaceResult {
  std::string id;
  double max;
  CuboidPoint argmax;

  friend bool operator==(const FaceResult& a, const FaceResult& b) {
    return a.id == b.id && a.max == b.max && a.argmax.p == b.argmax.p &&
           a.argmax.x == b.argmax.x && a.argmax.y == b.argmax.y;
  }
};

namespace detail {

struct BoundaryElement {
  const char* id;
  Box box;
};

inline std::vector<BoundaryElement> cuboid_faces() {
  return {
      {"p=0", Box{{0.0, 0.0, 0.0}, {0.0, 1.0, 1.0}}},
      {"p=2", Box{{2.0, 0.0, 0.0}, {2.0, 1.0, 1.0}}},
      {"x=0", Box{{0.0, 0.0, 0.0}, {2.0, 0.0, 1.0}}},
      {"x=1", Box{{0.0, 1.0, 0.0}, {2.0, 1.0, 1.0}}},
      {"y=0", Box{{0.0, 0.0, 0.0}, {2.0, 1.0, 0.0}}},
      {"y=1", Box{{0.0, 0.0, 1.0}, {2.0, 1.0, 1.0}}},
  };
}

inline std::vector<BoundaryElement> cuboid_edges() {
  return {
      {"p=0;x=0", Box{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0}}},
      {"p=0;x=1", Box{{0.0, 1.0, 0.0}, {0.0, 1.0, 1.0}}},
      {"p=2;x=0", Box{{2.0, 0.0, 0.0}, {2.0, 0.0, 1.0}}},
      {"p=2;x=1", Box{{2.0, 1.0, 0.0}, {2.0, 1.0, 1.0}}},
      {"p=0;y=0", Box{{0.0, 0.0, 0.0}, {0.0, 1.0, 0.0}}},
      {"p=0;y=1", Box{{0.0, 0.0, 1.0}, {0.0, 1.0, 1.0}}},
      {"p=2;y=0", Box{{2.0, 0.0, 0.0}, {2.0, 1.0, 0.0}}},
      {"p=2;y=1", Box{{2.0, 0.0, 1.0}, {2.0, 1.0, 1.0}}},
      {"x=0;y=0", Box{{0.0, 0.0, 0.0}, {2.0, 0.0, 0.0}}},
      {"x=0;y=1", Box{{0.0, 0.0, 1.0}, {2.0, 0.0, 1.0}}},
      {"x=1;y=0", Box{{0.0, 1.0, 0.0}, {2.0, 1.0, 0.0}}},
      {"x=1;y=1", Box{{0.0, 1.0, 1.0}, {2.0, 1.0, 1.0}}},
  };
}

inline std::vector<FaceResult> scan_elements(const ScalarField& field,
                                             const std::vector<BoundaryElement>& elements,
                                             int resolution, int rounds) {
  std::vector<FaceResult> out;
  out.reserve(elements.size());
  for (const auto& e : elements) {
    const GridResult coarse = grid_max_in(field, e.box, resolution);
    const GridResult fine = refine_max_in(field, e.box, coarse.point, rounds);
    out.push_back(FaceResult{e.id, fine.value, fine.point});
  }
  return out;
}

}  // namespace detail

/// Maximum of the field on each of the six closed faces of the cuboid.
inline std::vector<FaceResult> face_scan(const ScalarField& field, int resolution = 64,
                                         int rounds = 30) {
  return detail::scan_elements(field, detail::cuboid_faces(), resolution, rounds);
}

/// Maximum of the field on each of the twelve edges of the cuboid.
inline std::vector<FaceResult> edge_scan(const ScalarField& field, int resolution = 64,
                                         int rounds = 30) {
  return detail::scan_elements(field, detail::cuboid_edges(), resolution, rounds);
}

/// Where the verified maximum sits, by the number of active bound
/// constraints at the argmax.
enum class Stage { Interior, Face, Edge, Vertex };

inline const char* stage_name(Stage s) {
  switch (s) {
    case Stage::Interior: return "interior";
    case Stage::Face: return "face";
    case Stage::Edge: return "edge";
    default: return "vertex";
  }
}

struct OptimizationReport {
  double max_value = 0.0;
  CuboidPoint argmax{0.0, 0.0, 0.0};
  Stage stage = Stage::Interior;
  std::vector<FaceResult> face_table;
  std::vector<FaceResult> edge_table;
  int grid_initial = 0;
  int refinement_rounds = 0;
  double tolerance_estimate = 0.0;
  std::vector<std::uint64_t> seeds;
  double bound_closed_form = 0.0;
  double extremal_h3 = 0.0;

  friend bool operator==(const OptimizationReport& a, const OptimizationReport& b) {
    return a.max_value == b.max_value && a.argmax.p == b.argmax.p &&
           a.argmax.x == b.argmax.x && a.argmax.y == b.argmax.y && a.stage == b.stage &&
           a.face_table == b.face_table && a.edge_table == b.edge_table &&
           a.grid_initial == b.grid_initial && a.refinement_rounds == b.refinement_rounds &&
           a.tolerance_estimate == b.tolerance_estimate && a.seeds == b.seeds &&
           a.bound_closed_form == b.bound_closed_form && a.extremal_h3 == b.extremal_h3;
  }
};

namespace detail {

inline Stage classify_stage(const CuboidPoint& pt) {
  constexpr double tol = 1e-7;
  int active = 0;
  if (pt.p <= tol || pt.p >= 2.0 - tol) ++active;
  if (pt.x <= tol || pt.x >= 1.0 - tol) ++active;
  if (pt.y <= tol || pt.y >= 1.0 - tol) ++active;
  switch (active) {
    case 0: return Stage::Interior;
    case 1: return Stage::Face;
    case 2: return Stage::Edge;
    default: return Stage::Vertex;
  }
}

/// Empirical Lipschitz constant at the argmax times the final refinement
/// cell, floored at 1e-9.
inline double tolerance_estimate_at(const ScalarField& field, const CuboidPoint& pt,
                                    int rounds) {
  const std::array<double, 3> extent{2.0, 1.0, 1.0};
  const std::array<double, 3> c{pt.p, pt.x, pt.y};
  const double f0 = field.evaluator(pt);
  const double h = 1e-6;
  double lipschitz = 0.0;
  double final_cell = 0.0;
  for (int i = 0; i < 3; ++i) {
    final_cell = std::max(final_cell, extent[i] * std::pow(0.5, rounds));
    for (double dir : {-1.0, 1.0}) {
      std::array<double, 3> probe = c;
      probe[i] = std::clamp(probe[i] + dir * h, 0.0, extent[i]);
      if (probe[i] == c[i]) continue;
      const double df = std::abs(field.evaluator(to_point(probe)) - f0);
      lipschitz = std::max(lipschitz, df / std::abs(probe[i] - c[i]));
    }
  }
  return std::max(lipschitz * final_cell, 1e-9);
}

}  // namespace detail

/// Runs the full cuboid scan plus the face and edge scans on the class's
/// surrogate, folds them into one global maximum (each closed face absorbs
/// its edges), and checks the result against the theorem's closed-form bound
/// and against the extremal function. Fully deterministic for fixed inputs.
inline OptimizationReport verify_sharp_bound(const ClassTag& tag, int resolution = 64,
                                             int rounds = 30) {
  const ScalarField field = field_for(tag);

  const GridResult coarse = grid_max(field, resolution);
  const GridResult fine = refine_max(field, coarse.point, rounds);

  std::vector<FaceResult> edges = edge_scan(field, resolution, rounds);
  std::vector<FaceResult> faces = face_scan(field, resolution, rounds);

  // A closed face contains its four edges, so each face entry absorbs any
  // larger adjacent edge maximum; this keeps face >= edge exactly.
  for (auto& face : faces) {
    detail::Incumbent inc;
    inc.offer(face.max, {face.argmax.p, face.argmax.x, face.argmax.y});
    for (const auto& edge : edges) {
      const std::string& id = edge.id;
      const auto sep = id.find(';');
      if (id.substr(0, sep) == face.id || id.substr(sep + 1) == face.id)
        inc.offer(edge.max, {edge.argmax.p, edge.argmax.x, edge.argmax.y});
    }
    face.max = inc.value;
    face.argmax = detail::to_point(inc.point);
  }

  detail::Incumbent global;
  global.offer(fine.value, {fine.point.p, fine.point.x, fine.point.y});
  for (const auto& face : faces) global.offer(face.max, {face.argmax.p, face.argmax.x, face.argmax.y});

  OptimizationReport report;
  report.max_value = global.value;
  report.argmax = detail::to_point(global.point);
  report.stage = detail::classify_stage(report.argmax);
  report.face_table = std::move(faces);
  report.edge_table = std::move(edges);
  report.grid_initial = resolution;
  report.refinement_rounds = rounds;
  report.tolerance_estimate = detail::tolerance_estimate_at(field, report.argmax, rounds);
  report.bound_closed_form = sharp_bound(tag);

  const TruncatedSeries extremal = tag.kind() == ClassKind::Star
                                       ? extremal_star(kDefaultOrder)
                                       : extremal_qstar(tag.q(), kDefaultOrder);
  report.extremal_h3 = std::abs(h3(coefficients_of(extremal)));

  if (report.max_value > report.bound_closed_form + kDominationSlack)
    throw BoundViolation(field.label + ": numerical maximum exceeds the closed-form bound");
  if (std::abs(report.extremal_h3 - report.max_value) > kSharpnessTolerance)
    throw SharpnessGap(field.label + ": extremal |H3| does not attain the verified maximum");
  return report;
}

}  // namespace hankel
