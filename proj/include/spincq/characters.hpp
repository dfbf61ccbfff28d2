#pragma once

#include <map>
#include <string>
#include <vector>

#include "spincq/lie_core.hpp"
#include "spincq/orbits.hpp"

namespace spincq {

// Closed integer box, enumerated lexicographically (first coordinate slowest).
struct IntBox {
  IntVector lo, hi;

  static IntBox cube(std::size_t rank, std::int64_t lo, std::int64_t hi);
  static IntBox parse(std::string_view text, std::size_t rank);  // "-10:10" or "-6:3,-6:3"
  std::size_t rank() const { return lo.size(); }
  std::size_t size() const;
  bool contains(const IntVector& p) const;
  std::vector<IntVector> points() const;
  IntBox grown(std::int64_t margin) const;
};

// sign · t^offset · Π_j Σ_{k≥0} t^{k·d_j}, with ⟨d_j, witness⟩ > 0 for all j.
struct SeriesTerm {
  int sign = 1;
  IntVector offset;
  std::vector<IntVector> generators;
  Covector witness;
};

class FormalCharacter {
 public:
  explicit FormalCharacter(std::size_t rank = 1) : rank_(rank) {}

  static FormalCharacter monomial(const IntVector& w, std::int64_t mult = 1);

  std::size_t rank() const { return rank_; }
  const std::vector<SeriesTerm>& terms() const { return terms_; }
  const std::map<IntVector, std::int64_t>& tail() const { return tail_; }
  bool is_finite() const { return terms_.empty(); }

  void add_term(SeriesTerm t);  // validates the polarization witness
  void add_monomial(const IntVector& w, std::int64_t mult);

  FormalCharacter& operator+=(const FormalCharacter& o);
  FormalCharacter& operator-=(const FormalCharacter& o);
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
  friend FormalCharacter operator-(const FormalCharacter& a);

  // Finite character agreeing with this one on the box and vanishing outside it.
  FormalCharacter truncated(const IntBox& box) const;

 private:
  std::size_t rank_;
  std::vector<SeriesTerm> terms_;
  std::map<IntVector, std::int64_t> tail_;
};

std::int64_t term_mult_at(const SeriesTerm& t, const IntVector& mu);
std::int64_t mult_at(const FormalCharacter& f, const IntVector& mu);

// Worker count: explicit value if nonzero, else SPINCQ_THREADS, else 1.
unsigned worker_count(unsigned requested = 0);
std::vector<std::int64_t> window(const FormalCharacter& f, const IntBox& box, unsigned threads = 0);
std::string window_csv(const FormalCharacter& f, const IntBox& box, unsigned threads = 0);

class CharacterK {
 public:
  explicit CharacterK(RootDatum datum) : datum_(std::move(datum)) {}

  const RootDatum& datum() const { return datum_; }
  const std::map<WeightVector, std::int64_t>& mults() const { return mults_; }

  // Label must be strictly dominant with label - ρ integral.
  void add(const WeightVector& label, std::int64_t mult);
  std::int64_t at(const WeightVector& label) const;

  CharacterK& operator+=(const CharacterK& o);
  friend CharacterK operator-(const CharacterK& a);
  friend bool operator==(const CharacterK& a, const CharacterK& b) {
    return a.datum_ == b.datum_ && a.mults_ == b.mults_;
  }

 private:
  RootDatum datum_;
  std::map<WeightVector, std::int64_t> mults_;
};

bool is_label(const WeightVector& label, const RootDatum& datum);

// T-weights of π_λ with multiplicity.
std::map<IntVector, std::int64_t> irreducible_weights(const WeightVector& label, const RootDatum& datum);
FormalCharacter restrict_to_torus(const CharacterK& c);

// Σ_ν mult(ν)·sign·π_{dominant(ν + rho_h + rho_c)}; singular parameters contribute 0.
CharacterK holomorphic_induct(const FormalCharacter& h_weights, const WeightVector& rho_c,
                              const RootDatum& datum, const WeightVector& rho_h = {});

std::int64_t coefficient(const CharacterK& c, const CoadjointOrbit& o);

nlohmann::json to_json_value(const CharacterK& c);
CharacterK character_from_json(const nlohmann::json& j, const RootDatum& datum);
std::string to_string(const CharacterK& c);

}  // namespace spincq
