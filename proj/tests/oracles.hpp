#pragma once

// Independent reference computations used to cross-check the library.
// None of these call the routine they are checking.

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "spincq/characters.hpp"

namespace oracle {

using spincq::IntBox;
using spincq::IntVector;
using spincq::Rational;
using Poly = std::map<IntVector, std::int64_t>;

inline Rational height(const IntVector& w, const spincq::Covector& beta) {
  Rational h = 0;
  for (std::size_t i = 0; i < w.size(); ++i) h += Rational(static_cast<long>(w[i])) * beta[i];
  return h;
}

// Multiplies out sign·t^offset·Π_j (1 + t^{d_j} + t^{2d_j} + ...) one factor at a time,
// dropping monomials whose witness height exceeds the highest point of the box.
inline Poly expand_term(const spincq::SeriesTerm& t, const IntBox& box) {
  Rational cap = height(box.lo, t.witness);
  for (const auto& p : box.points()) cap = std::max(cap, height(p, t.witness));
  Poly acc{{t.offset, t.sign}};
  for (const auto& d : t.generators) {
    Rational step = height(d, t.witness);
    if (step <= 0) throw std::logic_error("generator not positive on witness");
    Poly next;
    for (const auto& [w, c] : acc) {
      IntVector cur = w;
      while (height(cur, t.witness) <= cap) {
        next[cur] += c;
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += d[i];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

inline std::vector<std::int64_t> expand_window(const spincq::FormalCharacter& f, const IntBox& box) {
  Poly total;
  for (const auto& t : f.terms())
    for (const auto& [w, c] : expand_term(t, box)) total[w] += c;
  for (const auto& [w, c] : f.tail()) total[w] += c;
  std::vector<std::int64_t> out;
  for (const auto& p : box.points()) {
    auto it = total.find(p);
    out.push_back(it == total.end() ? 0 : it->second);
  }
  return out;
}

// Weight multiplicities of the SU(3) irreducible with highest weight pω1+qω2 from Gelfand–Tsetlin patterns.
inline Poly su3_weights_gt(std::int64_t p, std::int64_t q) {
  Poly out;
  const std::int64_t m1 = p + q, m2 = q, m3 = 0;
  for (std::int64_t a1 = m2; a1 <= m1; ++a1)
    for (std::int64_t a2 = m3; a2 <= m2; ++a2)
      for (std::int64_t b = a2; b <= a1; ++b) {
        std::int64_t w1 = b, w2 = a1 + a2 - b, w3 = m1 + m2 + m3 - a1 - a2;
        out[{w1 - w2, w2 - w3}] += 1;
      }
  return out;
}

// Weyl normalization by sorting ε-coordinates: SU(2) (x) ↦ ±x, U(2) (x, y), SU(3) ω-coordinates (a, b) ↦ ε = (a+b, b, 0).
struct Normal {
  int sign;
  std::vector<Rational> dominant;
};

inline std::optional<Normal> sort_normalize(std::vector<Rational> eps) {
  int sign = 1;
  for (std::size_t i = 0; i < eps.size(); ++i)
    for (std::size_t j = 0; j + 1 < eps.size() - i; ++j)
      if (eps[j] < eps[j + 1]) {
        std::swap(eps[j], eps[j + 1]);
        sign = -sign;
      }
  for (std::size_t j = 0; j + 1 < eps.size(); ++j)
    if (eps[j] == eps[j + 1]) return std::nullopt;
  return Normal{sign, eps};
}

inline std::optional<Normal> su3_normalize(const Rational& a, const Rational& b) {
  auto n = sort_normalize({a + b, b, Rational(0)});
  if (!n) return n;
  const auto& e = n->dominant;
  return Normal{n->sign, {e[0] - e[1], e[1] - e[2]}};
}

inline std::optional<Normal> su2_normalize(const Rational& x) {
  if (x == 0) return std::nullopt;
  return Normal{x > 0 ? 1 : -1, {abs(x)}};
}

// SU(3) orbit calculus in ε-coordinates, for exhaustive ancestor scans.
struct Su3Orbit {
  std::array<Rational, 3> e;  // x1 ≥ x2 ≥ x3, x3 = 0
};

inline std::array<Rational, 2> to_omega(const std::array<Rational, 3>& e) { return {e[0] - e[1], e[1] - e[2]}; }

inline bool su3_integral(const std::array<Rational, 3>& e) {
  auto w = to_omega(e);
  return w[0].get_den() == 1 && w[1].get_den() == 1;
}

// Roots e_i - e_j, i < j.
inline std::array<Rational, 3> su3_half_sum(const std::array<Rational, 3>& e, bool positive_side) {
  std::array<Rational, 3> r{0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      bool take = positive_side ? e[i] > e[j] : e[i] == e[j];
      if (!take) continue;
      r[i] += Rational(1, 2);
      r[j] -= Rational(1, 2);
    }
  return r;
}

inline bool su3_admissible(const std::array<Rational, 3>& e) {
  auto r = su3_half_sum(e, true);
  return su3_integral({e[0] - r[0], e[1] - r[1], e[2] - r[2]});
}

inline std::array<Rational, 3> su3_shift(const std::array<Rational, 3>& e) {
  auto r = su3_half_sum(e, false);
  std::array<Rational, 3> s{e[0] + r[0], e[1] + r[1], e[2] + r[2]};
  std::sort(s.begin(), s.end(), [](const Rational& x, const Rational& y) { return x > y; });
  for (auto& x : s) x -= s[2];
  return s;
}

// All admissible dominant SU(3) orbits in ω-coordinates of the half-lattice box [0, R]², whose shift is (la, lb).
inline std::vector<std::array<Rational, 2>> su3_ancestors(const Rational& la, const Rational& lb, std::int64_t r) {
  std::vector<std::array<Rational, 2>> out;
  for (std::int64_t i = 0; i <= 2 * r; ++i)
    for (std::int64_t j = 0; j <= 2 * r; ++j) {
      Rational a(i, 2), b(j, 2);
      a.canonicalize();
      b.canonicalize();
      std::array<Rational, 3> e{a + b, b, Rational(0)};
      if (!su3_admissible(e)) continue;
      auto s = to_omega(su3_shift(e));
      if (s[0] == la && s[1] == lb) out.push_back({a, b});
    }
  return out;
}

// Golden fixtures: {"version": 1, ...}; weights as "p/q" strings or integers.
inline nlohmann::json load_fixture(const std::string& dir, const std::string& name) {
  std::ifstream in(dir + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  auto j = nlohmann::json::parse(in);
  if (j.at("version").get<int>() != 1) throw std::runtime_error("unsupported fixture version in " + name);
  return j;
}

inline std::map<IntVector, std::int64_t> fixture_monomials(const nlohmann::json& arr) {
  std::map<IntVector, std::int64_t> out;
  for (const auto& m : arr) out[m.at("mu").get<IntVector>()] += m.at("mult").get<std::int64_t>();
  return out;
}

inline std::vector<std::int64_t> dense(const std::map<IntVector, std::int64_t>& m, const IntBox& box) {
  std::vector<std::int64_t> out;
  for (const auto& p : box.points()) {
    auto it = m.find(p);
    out.push_back(it == m.end() ? 0 : it->second);
  }
  return out;
}

}  // namespace oracle
