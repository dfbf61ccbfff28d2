#include "spincq/orbits.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "spincq/errors.hpp"

namespace spincq {

CoadjointOrbit CoadjointOrbit::through(const WeightVector& point, const RootDatum& datum) {
  if (point.rank() != datum.rank()) throw PreconditionViolated("orbit point has wrong rank");
  WeightVector rep = dominant_representative(point, datum);
  LeviClass levi = stabilizer_levi(rep, datum);
  return CoadjointOrbit(std::move(rep), datum, std::move(levi));
}

RationalBox RationalBox::cube(std::size_t rank, const Rational& radius) {
  return RationalBox{std::vector<Rational>(rank, -radius), std::vector<Rational>(rank, radius)};
}

WeightVector rho_of(const WeightVector& xi, const RootDatum& datum) {
  WeightVector s = WeightVector::zero(datum.rank());
  for (const auto& a : datum.positive_roots()) {
    int sg = sign(datum.pairing(a, xi));
    if (sg > 0) s += a;
    if (sg < 0) s -= a;
  }
  return frac(1, 2) * s;
}

bool is_admissible(const CoadjointOrbit& p) {
  return (p.rep() - rho_of(p.rep(), p.datum())).is_integral();
}

CoadjointOrbit shift(const CoadjointOrbit& p) {
  WeightVector rho_levi = WeightVector::zero(p.datum().rank());
  for (const auto& a : p.levi().roots) rho_levi += a;
  return CoadjointOrbit::through(p.rep() + frac(1, 2) * rho_levi, p.datum());
}

OrbitQuantization qspin_orbit(const CoadjointOrbit& p) {
  if (!is_admissible(p)) throw NotAdmissible("orbit through " + to_string(p.rep()) + " is not admissible");
  CoadjointOrbit s = shift(p);
  if (!s.is_regular()) return {};
  return {s.rep()};
}

namespace {

std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

RationalBox sound_ancestor_box(const CoadjointOrbit& o) {
  const auto& datum = o.datum();
  Rational n2 = datum.norm2(o.rep());
  auto ginv = inverse(datum.gram());
  RationalBox box;
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    // |x_i| = |<x, G^{-1} e_i>| <= ∥x∥ · sqrt(G^{-1}_ii)
    Rational b(static_cast<long>(ceil_sqrt(n2 * ginv[i][i])));
    box.lo.push_back(-b);
    box.hi.push_back(b);
  }
  return box;
}

std::vector<WeightVector> dominant_half_lattice_points(const RationalBox& box, const RootDatum& datum) {
  const std::size_t r = datum.rank();
  if (box.lo.size() != r || box.hi.size() != r) throw PreconditionViolated("box rank mismatch");
  IntVector lo(r), hi(r);
  for (std::size_t i = 0; i < r; ++i) {
    lo[i] = ceil_int(2 * box.lo[i]);
    hi[i] = floor_int(2 * box.hi[i]);
    if (lo[i] > hi[i]) return {};
  }
  std::vector<WeightVector> out;
  IntVector cur = lo;
  while (true) {
    WeightVector p = WeightVector::zero(r);
    for (std::size_t i = 0; i < r; ++i) p[i] = frac(cur[i], 2);
    if (datum.is_dominant(p)) out.push_back(std::move(p));
    std::size_t k = r;
    while (k > 0) {
      --k;
      if (cur[k] < hi[k]) {
        ++cur[k];
        break;
      }
      cur[k] = lo[k];
      if (k == 0) return out;
    }
  }
}

std::vector<CoadjointOrbit> admissible_orbits_in_box(const RootDatum& datum, const RationalBox& box) {
  std::vector<CoadjointOrbit> out;
  for (const auto& p : dominant_half_lattice_points(box, datum)) {
    auto o = CoadjointOrbit::through(p, datum);
    if (is_admissible(o)) out.push_back(std::move(o));
  }
  return out;
}

std::vector<CoadjointOrbit> ancestors_of(const CoadjointOrbit& o, const std::optional<LeviClass>& h,
                                         const std::optional<RationalBox>& search_box) {
  if (!o.is_regular() || !is_admissible(o))
    throw PreconditionViolated("ancestors_of needs a regular admissible orbit");
  RationalBox box = search_box ? *search_box : sound_ancestor_box(o);
  std::vector<CoadjointOrbit> out;
  for (auto& p : admissible_orbits_in_box(o.datum(), box)) {
    if (h && !p.levi().conjugate_to(*h)) continue;
    if (shift(p) == o) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_very_regular(const WeightVector& lambda, const RootDatum& datum) {
  if (!datum.is_regular(lambda)) return false;
  WeightVector d = lambda - rho_of(lambda, datum);
  for (const auto& a : datum.positive_roots()) {
    Rational side = datum.pairing(a, lambda);
    if (sign(side) * sign(datum.pairing(a, d)) < 0) return false;
  }
  return true;
}

MagicalReport magical_check(const WeightVector& lambda, const WeightVector& mu, const RootDatum& datum) {
  if (!is_very_regular(lambda, datum))
    throw PreconditionViolated("λ = " + to_string(lambda) + " is not very regular");
  MagicalReport r;
  WeightVector beta = mu - lambda;
  r.lhs = datum.norm2(beta);
  std::vector<WeightVector> levi;
  for (const auto& a : datum.positive_roots())
    if (datum.pairing(a, mu) == 0) levi.push_back(a);
  r.rhs = frac(1, 2) * normalized_trace(levi, beta, datum);
  r.holds = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  if (r.equality) {
    bool c1 = lambda - rho_of(lambda, datum) == mu - rho_of(mu, datum);
    bool c2 = shift(CoadjointOrbit::through(mu, datum)) == CoadjointOrbit::through(lambda, datum);
    r.conclusions_verified = c1 && c2;
  }
  return r;
}

Rational d_value(const WeightVector& theta, const std::vector<WeightVector>& tangent_weights,
                 const RootDatum& datum) {
  return datum.norm2(theta) + frac(1, 2) * normalized_trace(tangent_weights, theta, datum) -
         normalized_trace(datum.positive_roots(), theta, datum);
}

bool vanishing_criterion(const GenericStabilizer& k_m, const RootDatum& datum) {
  if (std::holds_alternative<NonLevi>(k_m)) return false;
  const auto& cls = std::get<LeviClass>(k_m);
  // closure under root addition inside the positive system
  const auto& pos = datum.positive_roots();
  auto in = [&](const WeightVector& w) { return std::find(cls.roots.begin(), cls.roots.end(), w) != cls.roots.end(); };
  for (const auto& a : cls.roots) {
    if (std::find(pos.begin(), pos.end(), a) == pos.end()) return false;
    for (const auto& b : cls.roots) {
      WeightVector s = a + b;
      if (std::find(pos.begin(), pos.end(), s) != pos.end() && !in(s)) return false;
    }
  }
  for (const auto& h : levi_classes(datum))
    if (h.semisimple_label == cls.semisimple_label) return true;
  return false;
}

nlohmann::json orbit_to_json(const CoadjointOrbit& p) {
  nlohmann::json j;
  j["group"] = p.datum().name();
  j["rep"] = to_json_value(p.rep());
  bool adm = is_admissible(p);
  j["admissible"] = adm;
  j["regular"] = p.is_regular();
  j["shift"] = to_json_value(shift(p).rep());
  if (!adm) {
    j["qspin"] = nullptr;
  } else {
    auto q = qspin_orbit(p);
    j["qspin"] = q.is_zero() ? nlohmann::json("0") : to_json_value(*q.label);
  }
  return j;
}

std::string ancestor_graph_dot(const RootDatum& datum, const RationalBox& box) {
  auto orbits = admissible_orbits_in_box(datum, box);
  std::map<WeightVector, std::size_t> id;
  for (const auto& o : orbits) id.emplace(o.rep(), id.size());
  std::ostringstream out;
  out << "digraph ancestors {\n  rankdir=LR;\n  zero [label=\"0\", shape=box];\n";
  for (const auto& o : orbits)
    out << "  n" << id[o.rep()] << " [label=\"" << to_string(o.rep()) << "\""
        << (o.is_regular() ? ", shape=doublecircle" : "") << "];\n";
  std::size_t extra = id.size();
  for (const auto& o : orbits) {
    CoadjointOrbit s = shift(o);
    if (s == o) continue;
    out << "  n" << id[o.rep()] << " -> ";
    if (!s.is_regular()) {
      out << "zero;\n";
      continue;
    }
    auto it = id.find(s.rep());
    if (it == id.end()) {
      it = id.emplace(s.rep(), extra++).first;
      out << "n" << it->second << ";\n  n" << it->second << " [label=\"" << to_string(s.rep())
          << "\", shape=doublecircle, style=dashed];\n";
    } else {
      out << "n" << it->second << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace spincq
