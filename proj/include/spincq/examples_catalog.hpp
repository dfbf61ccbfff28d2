#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spincq/characters.hpp"
#include "spincq/fixedpoint_index.hpp"
#include "spincq/orbits.hpp"
#include "spincq/reduction.hpp"

namespace spincq {

enum class ExampleKind { P1, P1Deformed, ProductP1, Hirzebruch, SU3Flag };

struct ExampleDescriptor {
  ExampleKind kind = ExampleKind::P1;
  std::vector<std::int64_t> params;

  // "p1:4", "p1_deformed:4,15", "product_p1", "hirzebruch:3,6", "su3_flag:4,1"
  static ExampleDescriptor parse(std::string_view text);  // throws UnknownDescriptor
  std::string to_string() const;
};

// M = K ×_H Y with Y an A_H-manifold given by fixed-point data in t* coordinates of K.
struct InducedSlice {
  RootDatum group;
  LeviClass levi;
  FixedPointModel y_model;
  WeightVector rho_c;  // ρ of the complex structure on k/h
  WeightVector rho_h;  // ρ of h, carries H-weights to H-labels
  IntBox y_support;    // contains the support of the index of Y
};

struct ExampleBundle {
  ExampleDescriptor descriptor;
  RootDatum group = RootDatum::torus(1);
  FixedPointModel torus_model;  // M as a manifold for the maximal torus of the group
  FiberProvider torus_fibers;   // empty when reduced spaces are not points
  ImagePredicate torus_relint;
  std::optional<InducedSlice> slice;
  AncestorSliceProvider ancestor_slices;
  GenericStabilizer generic_stabilizer = NonLevi{};
  std::optional<FormalCharacter> golden_T;
  std::optional<CharacterK> golden_K;
  KirwanSet moment_image;
  IntBox window;  // torus image plus a margin of 3
};

ExampleBundle build(const ExampleDescriptor& desc);
ExampleBundle build(std::string_view desc);

// Index of Y, truncated to its support box.
FormalCharacter slice_index(const InducedSlice& s);
CharacterK induced_character(const InducedSlice& s);
// Fixed points w·y, w ∈ W/W_H, with the tangent weights of Y and of k/h moved by w.
FixedPointModel induce_torus_model(const InducedSlice& s);

// Descriptors used by the property and acceptance suites.
std::vector<ExampleDescriptor> catalog_descriptors();

}  // namespace spincq
