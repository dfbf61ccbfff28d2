#include "spincq/fixedpoint_index.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "spincq/errors.hpp"

namespace spincq {

void FixedPoint::validate() const {
  if (tangent_weights.empty()) throw PreconditionViolated("fixed point " + id + " has no tangent weights");
  for (const auto& a : tangent_weights) {
    if (a.size() != s_weight.rank()) throw PreconditionViolated("fixed point " + id + ": rank mismatch");
    if (std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; }))
      throw PreconditionViolated("fixed point " + id + " is not isolated (zero tangent weight)");
  }
  if (orientation != 1 && orientation != -1) throw PreconditionViolated("orientation must be ±1");
  if (!s_weight.is_half_integral()) throw PreconditionViolated("2·s_weight must be integral at " + id);
  if (phi != s_weight) throw PreconditionViolated("phi differs from s_weight at " + id);
  (void)line_weight(*this);
}

Rational FixedPoint::pairing_sum(const Covector& beta) const {
  Rational s = 0;
  for (const auto& a : tangent_weights) s += dot(a, beta);
  return s;
}

void FixedPointModel::validate() const {
  for (const auto& p : points) {
    if (p.s_weight.rank() != rank) throw PreconditionViolated("fixed point " + p.id + " has wrong rank");
    p.validate();
  }
  for (const auto& f : free_components)
    if (f.phi.rank() != rank) throw PreconditionViolated("free component " + f.label + " has wrong rank");
}

IntVector line_weight(const FixedPoint& p) {
  WeightVector l = p.s_weight;
  for (const auto& a : p.tangent_weights) l -= frac(1, 2) * WeightVector::from_ints(a);
  if (!l.is_integral())
    throw SpinCIntegrality("s_weight - ½Σa is not integral at fixed point " + p.id + ": " + to_string(l));
  return l.to_ints();
}

bool is_generic_for(const FixedPoint& p, const Covector& beta) {
  for (const auto& a : p.tangent_weights)
    if (dot(a, beta) == 0) return false;
  return true;
}

bool is_generic_for(const FixedPointModel& m, const Covector& beta) {
  return std::all_of(m.points.begin(), m.points.end(), [&](const FixedPoint& p) { return is_generic_for(p, beta); });
}

Covector generic_polarization(const FixedPointModel& m) {
  for (long base = 1009;; base += 2) {
    Covector beta(m.rank);
    Rational c = 1;
    for (std::size_t i = 0; i < m.rank; ++i) {
      beta[i] = c;
      c /= base;
    }
    if (is_generic_for(m, beta)) return beta;
  }
}

SeriesTerm local_term(const FixedPoint& p, const Covector& beta) {
  if (beta.size() != p.s_weight.rank()) throw PreconditionViolated("polarization has wrong rank");
  SeriesTerm t;
  t.sign = p.orientation;
  t.offset = line_weight(p);
  t.witness = beta;
  for (const auto& a : p.tangent_weights) {
    int s = sign(dot(a, beta));
    if (s == 0) throw NonGenericPolarization("polarization is orthogonal to a tangent weight at " + p.id);
    if (s > 0) {
      // (1 - t^{-a})^{-1} = -t^{a} Σ_{k≥0} t^{k a}
      t.sign = -t.sign;
      for (std::size_t i = 0; i < a.size(); ++i) t.offset[i] += a[i];
      t.generators.push_back(a);
    } else {
      IntVector neg = a;
      for (auto& x : neg) x = -x;
      t.generators.push_back(neg);
    }
  }
  return t;
}

FormalCharacter global_index(const FixedPointModel& m, const Covector& beta) {
  m.validate();
  FormalCharacter f(m.rank);
  for (const auto& p : m.points) f.add_term(local_term(p, beta));
  return f;
}

std::vector<WittenComponent> witten_decomposition(const FixedPointModel& m) {
  m.validate();
  if (m.free_components.size() > 1)
    throw UnhandledComponentGeometry("more than one free component of the critical set");
  const FreeComponent* free = m.free_components.empty() ? nullptr : &m.free_components.front();

  std::map<WeightVector, std::vector<const FixedPoint*>> by_level;
  for (const auto& p : m.points) by_level[p.phi].push_back(&p);

  std::vector<WittenComponent> out;
  FormalCharacter localized(m.rank);
  std::vector<std::string> absorbed;
  for (const auto& [level, pts] : by_level) {
    if (free && level == free->phi) {
      for (const auto* p : pts) absorbed.push_back(p->id);
      continue;
    }
    if (level.is_zero())
      throw UnhandledComponentGeometry("fixed point at moment level 0 without a free component");
    WittenComponent c;
    c.label = level;
    Covector beta = level.coords();
    for (const auto* p : pts) {
      if (!is_generic_for(*p, beta))
        throw UnhandledComponentGeometry("fixed point " + p->id + " lies on a positive-dimensional critical set");
      c.point_ids.push_back(p->id);
    }
    c.name = to_string(level);
    c.character = FormalCharacter(m.rank);
    for (const auto* p : pts) c.character.add_term(local_term(*p, beta));
    localized += c.character;
    out.push_back(std::move(c));
  }
  if (free) {
    WittenComponent c;
    c.label = free->phi;
    c.name = free->label;
    c.residual = true;
    c.point_ids = absorbed;
    c.character = global_index(m, generic_polarization(m)) - localized;
    out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const WittenComponent& a, const WittenComponent& b) { return a.label < b.label; });
  }
  return out;
}

nlohmann::json to_json_value(const FixedPointModel& m) {
  nlohmann::json j;
  j["rank"] = m.rank;
  j["points"] = nlohmann::json::array();
  for (const auto& p : m.points) {
    nlohmann::json jp;
    jp["id"] = p.id;
    jp["tangent"] = p.tangent_weights;
    jp["s_weight"] = to_json_value(p.s_weight);
    jp["orientation"] = p.orientation;
    jp["phi"] = to_json_value(p.phi);
    j["points"].push_back(jp);
  }
  j["free"] = nlohmann::json::array();
  for (const auto& f : m.free_components) j["free"].push_back({{"label", f.label}, {"phi", to_json_value(f.phi)}});
  return j;
}

FixedPointModel fixed_point_model_from_json(const nlohmann::json& j) {
  try {
    FixedPointModel m;
    m.rank = j.at("rank").get<std::size_t>();
    for (const auto& jp : j.at("points")) {
      FixedPoint p;
      p.id = jp.value("id", std::string("p") + std::to_string(m.points.size()));
      p.tangent_weights = jp.at("tangent").get<std::vector<IntVector>>();
      p.s_weight = weight_from_json(jp.at("s_weight"));
      p.orientation = jp.at("orientation").get<int>();
      p.phi = weight_from_json(jp.at("phi"));
      m.points.push_back(std::move(p));
    }
    if (j.contains("free"))
      for (const auto& jf : j.at("free"))
        m.free_components.push_back({jf.at("label").get<std::string>(), weight_from_json(jf.at("phi"))});
    m.validate();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("fixed point model JSON: ") + e.what());
  }
}

std::string decomposition_csv(const std::vector<WittenComponent>& parts, const IntBox& box) {
  std::ostringstream out;
  for (std::size_t i = 0; i < box.rank(); ++i) out << "mu" << (i + 1) << ",";
  for (const auto& c : parts) out << "\"Q_" << c.name << "\",";
  out << "total\n";
  std::vector<std::vector<std::int64_t>> cols;
  for (const auto& c : parts) cols.push_back(window(c.character, box));
  auto pts = box.points();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (auto x : pts[k]) out << x << ",";
    std::int64_t total = 0;
    for (const auto& col : cols) {
      out << col[k] << ",";
      total += col[k];
    }
    out << total << "\n";
  }
  return out.str();
}

}  // namespace spincq
