#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spincq/lie_core.hpp"

namespace spincq {

class CoadjointOrbit {
 public:
  // Orbit through any point; the representative is moved into the dominant chamber.
  static CoadjointOrbit through(const WeightVector& point, const RootDatum& datum);

  const WeightVector& rep() const { return rep_; }
  const RootDatum& datum() const { return datum_; }
  const LeviClass& levi() const { return levi_; }
  bool is_regular() const { return levi_.roots.empty(); }

  friend bool operator==(const CoadjointOrbit& a, const CoadjointOrbit& b) {
    return a.datum_ == b.datum_ && a.rep_ == b.rep_;
  }
  friend bool operator<(const CoadjointOrbit& a, const CoadjointOrbit& b) { return a.rep_ < b.rep_; }

 private:
  CoadjointOrbit(WeightVector rep, RootDatum datum, LeviClass levi)
      : rep_(std::move(rep)), datum_(std::move(datum)), levi_(std::move(levi)) {}
  WeightVector rep_;
  RootDatum datum_;
  LeviClass levi_;
};

// Zero, or the label λ of π_λ (strictly dominant, λ - ρ integral).
struct OrbitQuantization {
  std::optional<WeightVector> label;
  bool is_zero() const { return !label.has_value(); }
  friend bool operator==(const OrbitQuantization& a, const OrbitQuantization& b) { return a.label == b.label; }
};

// Coordinate box in t* scanned on the half-lattice.
struct RationalBox {
  std::vector<Rational> lo, hi;
  static RationalBox cube(std::size_t rank, const Rational& radius);
};

WeightVector rho_of(const WeightVector& xi, const RootDatum& datum);
bool is_admissible(const CoadjointOrbit& p);
CoadjointOrbit shift(const CoadjointOrbit& p);
OrbitQuantization qspin_orbit(const CoadjointOrbit& p);  // throws NotAdmissible

// Box containing every μ with ∥μ∥ ≤ ∥rep(O)∥.
RationalBox sound_ancestor_box(const CoadjointOrbit& o);
// Dominant points of the box with 2·coords integral.
std::vector<WeightVector> dominant_half_lattice_points(const RationalBox& box, const RootDatum& datum);
std::vector<CoadjointOrbit> admissible_orbits_in_box(const RootDatum& datum, const RationalBox& box);

// Admissible P with shift(P) = O, restricted to class h when given; sorted by representative.
std::vector<CoadjointOrbit> ancestors_of(const CoadjointOrbit& o, const std::optional<LeviClass>& h,
                                         const std::optional<RationalBox>& search_box = std::nullopt);

struct MagicalReport {
  bool holds = false;
  bool equality = false;
  bool conclusions_verified = true;  // vacuous unless equality
  Rational lhs, rhs;
};
bool is_very_regular(const WeightVector& lambda, const RootDatum& datum);
MagicalReport magical_check(const WeightVector& lambda, const WeightVector& mu, const RootDatum& datum);

Rational d_value(const WeightVector& theta, const std::vector<WeightVector>& tangent_weights,
                 const RootDatum& datum);

struct NonLevi {};
using GenericStabilizer = std::variant<LeviClass, NonLevi>;
bool vanishing_criterion(const GenericStabilizer& k_m, const RootDatum& datum);

nlohmann::json orbit_to_json(const CoadjointOrbit& p);
// Nodes are admissible orbits of the box; edges P -> s(P).
std::string ancestor_graph_dot(const RootDatum& datum, const RationalBox& box);

}  // namespace spincq
