#pragma once

#include <string>
#include <vector>

#include "spincq/characters.hpp"
#include "spincq/lie_core.hpp"

namespace spincq {

struct FixedPoint {
  std::string id;
  std::vector<IntVector> tangent_weights;  // complex weights of T_pM
  WeightVector s_weight;                   // det(S)|_p has weight 2·s_weight
  int orientation = 1;
  WeightVector phi;  // moment value; equals s_weight

  void validate() const;
  Rational pairing_sum(const Covector& beta) const;
};

struct FreeComponent {
  std::string label;
  WeightVector phi;
};

struct FixedPointModel {
  std::size_t rank = 1;
  std::vector<FixedPoint> points;
  std::vector<FreeComponent> free_components;

  void validate() const;
};

// Line-bundle weight s - ½Σa; integral for a Spin^c structure.
IntVector line_weight(const FixedPoint& p);

bool is_generic_for(const FixedPoint& p, const Covector& beta);
bool is_generic_for(const FixedPointModel& m, const Covector& beta);
// Deterministic polarization generic for every point of the model.
Covector generic_polarization(const FixedPointModel& m);

// t^s / Π(t^{a/2} - t^{-a/2}) expanded so that its support recedes toward <·,beta> → +∞.
SeriesTerm local_term(const FixedPoint& p, const Covector& beta);
FormalCharacter global_index(const FixedPointModel& m, const Covector& beta);

struct WittenComponent {
  WeightVector label;
  std::string name;
  bool residual = false;  // free component, computed as global minus the rest
  std::vector<std::string> point_ids;
  FormalCharacter character;
};
std::vector<WittenComponent> witten_decomposition(const FixedPointModel& m);

nlohmann::json to_json_value(const FixedPointModel& m);
FixedPointModel fixed_point_model_from_json(const nlohmann::json& j);
std::string decomposition_csv(const std::vector<WittenComponent>& parts, const IntBox& box);

}  // namespace spincq
