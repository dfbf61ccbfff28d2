#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spincq/characters.hpp"
#include "spincq/fixedpoint_index.hpp"
#include "spincq/orbits.hpp"

namespace spincq {

// One point of Φ⁻¹(μ+ε)/T. The stabilizer Γ ≅ Z/order acts on a weight ν through
// exp(2πi⟨ν, gamma_cocharacter⟩/order).
struct FiberPoint {
  int orientation = 1;
  std::int64_t stabilizer_order = 1;
  WeightVector half_det_weight;
  IntVector gamma_cocharacter;
};

struct ReducedFiberModel {
  std::vector<FiberPoint> points;
};

std::int64_t qspin_point(const ReducedFiberModel& fiber, const WeightVector& mu);

// level = μ + ε; nullopt when the reduced space is not a finite set of points.
using FiberProvider = std::function<std::optional<ReducedFiberModel>(const WeightVector& level)>;
// Relative interior of Φ(M) in I(N).
using ImagePredicate = std::function<bool(const IntVector& mu)>;

struct ProfileOptions {
  ImagePredicate in_relint;
  FiberProvider fibers;
  std::vector<Covector> epsilons;  // defaults to two small generic perturbations
  unsigned threads = 0;
};

struct ProfileEntry {
  IntVector mu;
  std::int64_t value = 0;
  std::int64_t residual = 0;
  std::optional<bool> in_relint;
  std::vector<std::int64_t> fiber_values;  // one per ε when fiber data exists
  std::size_t absorbed_points = 0;         // fixed points on non-isolated critical sets at μ
  bool consistent = true;
};

std::vector<Covector> default_epsilons(std::size_t rank);
std::int64_t residual_at(const FixedPointModel& m, const FormalCharacter& global, const IntVector& mu,
                         std::size_t* absorbed = nullptr);
std::vector<ProfileEntry> reduced_profile(const FixedPointModel& m, const IntBox& box,
                                          const ProfileOptions& opts = {});

struct QRRow {
  IntVector mu;
  std::int64_t m = 0;
  std::int64_t q = 0;
  bool match = false;
};

struct QRReport {
  std::vector<QRRow> rows;
  bool summary = true;
  std::string to_csv() const;
  std::string to_table() const;
};

QRReport verify_qr_abelian(const FixedPointModel& m, const IntBox& box, const ProfileOptions& opts = {});

struct AncestorSlice {
  ReducedFiberModel fiber;
  WeightVector level;
};
// nullopt means no slice data for that ancestor.
using AncestorSliceProvider = std::function<std::optional<AncestorSlice>(const CoadjointOrbit& ancestor)>;

struct AncestorContribution {
  CoadjointOrbit ancestor;
  std::int64_t q;
};
struct AncestorMultiplicity {
  std::int64_t total = 0;
  std::vector<AncestorContribution> parts;
};

// Sums Q^spin(M_P) over the ancestors of O (of class h when given) in the sound box.
AncestorMultiplicity multiplicity_via_ancestors(const AncestorSliceProvider& slices, const CoadjointOrbit& o,
                                                const std::optional<LeviClass>& h = std::nullopt);

struct Segment {
  WeightVector from, to;
};
struct KirwanSet {
  std::vector<Segment> segments;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

struct ExampleDescriptor;
KirwanSet kirwan_image(const ExampleDescriptor& desc);

// Signed density Σ_p ε_p 1[q ∈ phi(p) + Cone(polarized weights)]; throws OnWall.
std::int64_t dh_density(const FixedPointModel& m, const Covector& query);

struct RasterGrid {
  Rational lo, hi, step;  // same range on every axis
  static RasterGrid parse(std::string_view text);  // "lo:hi:step"
  std::size_t samples() const;
};

struct DhRaster {
  std::size_t width = 0, height = 0;
  std::vector<std::int64_t> values;  // row-major, first row at the largest second coordinate
};

DhRaster dh_raster(const FixedPointModel& m, const RasterGrid& grid);
std::string to_pgm(const DhRaster& r);
std::string to_svg(const DhRaster& r, const RasterGrid& grid);

}  // namespace spincq
