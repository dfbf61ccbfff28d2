#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "spincq/rational.hpp"

namespace spincq {

// Element of t* in the lattice basis of its RootDatum.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> coords) : c_(std::move(coords)) {}
  WeightVector(std::initializer_list<Rational> coords) : c_(coords) {}

  static WeightVector zero(std::size_t rank) { return WeightVector(std::vector<Rational>(rank)); }
  static WeightVector from_ints(const IntVector& v);

  std::size_t rank() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_integral() const;
  bool is_half_integral() const;
  bool is_zero() const;
  IntVector to_ints() const;  // throws PreconditionViolated unless integral

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator-(const WeightVector& a);
  friend WeightVector operator*(const Rational& s, const WeightVector& a);

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const WeightVector& a, const WeightVector& b) { return !(a == b); }
  friend bool operator<(const WeightVector& a, const WeightVector& b) { return a.c_ < b.c_; }

 private:
  std::vector<Rational> c_;
};

std::string to_string(const WeightVector& v);  // "(p/q, p/q)"
nlohmann::json to_json_value(const WeightVector& v);
WeightVector weight_from_json(const nlohmann::json& j);
WeightVector parse_weight(std::string_view text);  // "3/2,-1/2" or "(3/2,-1/2)"

enum class GroupTag { Torus, SU2, U2, SU3 };

struct WeylElement {
  std::vector<IntVector> matrix;  // rows; acts on coordinate columns
  int length = 0;
  int sign() const { return length % 2 == 0 ? 1 : -1; }
  WeightVector apply(const WeightVector& v) const;
};

// Positive roots of the stabilizer of some ξ, up to conjugacy.
struct LeviClass {
  std::vector<WeightVector> roots;  // representative positive roots of h
  std::size_t center_dim = 0;
  std::string semisimple_label;  // "0", "su(2)", "su(3)"

  bool conjugate_to(const LeviClass& other) const {
    return semisimple_label == other.semisimple_label && center_dim == other.center_dim;
  }
};

class RootDatum {
 public:
  static RootDatum torus(std::size_t rank);
  static RootDatum su2();
  static RootDatum u2();
  static RootDatum su3();
  static RootDatum from_tag(std::string_view tag);  // "su2", "u2", "su3", "torus:r"; throws ParseError

  GroupTag tag() const;
  std::string name() const;  // round-trips through from_tag
  std::size_t rank() const;
  const std::vector<WeightVector>& positive_roots() const;
  const std::vector<WeightVector>& simple_roots() const;
  const std::vector<WeylElement>& weyl_group() const;
  const std::vector<std::vector<Rational>>& gram() const;

  Rational pairing(const WeightVector& a, const WeightVector& b) const;
  Rational norm2(const WeightVector& a) const { return pairing(a, a); }
  WeightVector reflect(const WeightVector& x, const WeightVector& alpha) const;

  bool is_dominant(const WeightVector& x) const;         // weakly
  bool is_strictly_dominant(const WeightVector& x) const;
  bool is_regular(const WeightVector& x) const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) { return a.name() == b.name(); }

 struct Data;  // opaque

 private:
  explicit RootDatum(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

nlohmann::json to_json_value(const RootDatum& d);
RootDatum root_datum_from_json(const nlohmann::json& j);

WeightVector rho(const RootDatum& datum);
LeviClass stabilizer_levi(const WeightVector& xi, const RootDatum& datum);
std::vector<LeviClass> levi_classes(const RootDatum& datum);  // one per conjugacy class

struct WeylNormalForm {
  int sign = 1;
  WeightVector dominant;
};
// Empty optional means ξ is singular.
std::optional<WeylNormalForm> weyl_normalize(const WeightVector& xi, const RootDatum& datum);
// Dominant representative of the Weyl orbit, singular or not.
WeightVector dominant_representative(const WeightVector& xi, const RootDatum& datum);

Rational normalized_trace(const std::vector<WeightVector>& weights, const WeightVector& b,
                          const RootDatum& datum);

}  // namespace spincq
