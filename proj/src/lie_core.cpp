#include "spincq/lie_core.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "spincq/errors.hpp"

namespace spincq {

WeightVector WeightVector::from_ints(const IntVector& v) {
  std::vector<Rational> c;
  c.reserve(v.size());
  for (auto x : v) c.emplace_back(static_cast<long>(x));
  return WeightVector(std::move(c));
}

bool WeightVector::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return is_integer(x); });
}

bool WeightVector::is_half_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return is_half_integer(x); });
}

bool WeightVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

IntVector WeightVector::to_ints() const {
  IntVector out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(to_int64(x));
  return out;
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  if (o.rank() != rank()) throw PreconditionViolated("rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  if (o.rank() != rank()) throw PreconditionViolated("rank mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

WeightVector operator-(const WeightVector& a) {
  WeightVector out = a;
  for (auto& x : out.c_) x = -x;
  return out;
}

WeightVector operator*(const Rational& s, const WeightVector& a) {
  WeightVector out = a;
  for (auto& x : out.c_) x *= s;
  return out;
}

std::string to_string(const WeightVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

nlohmann::json to_json_value(const WeightVector& v) {
  auto j = nlohmann::json::array();
  for (const auto& x : v.coords()) j.push_back(to_string(x));
  return j;
}

WeightVector weight_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("weight must be a JSON array");
  std::vector<Rational> c;
  for (const auto& x : j) {
    if (x.is_string()) c.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer()) c.emplace_back(static_cast<long>(x.get<std::int64_t>()));
    else throw ParseError("weight coordinate must be a \"p/q\" string or an integer");
  }
  return WeightVector(std::move(c));
}

WeightVector parse_weight(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == '(' || ch == ')' || ch == ' '; }),
          s.end());
  std::vector<Rational> c;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    c.push_back(parse_rational(s.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return WeightVector(std::move(c));
}

WeightVector WeylElement::apply(const WeightVector& v) const {
  std::vector<Rational> out(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < v.rank(); ++j)
      if (matrix[i][j] != 0) out[i] += Rational(static_cast<long>(matrix[i][j])) * v[j];
  return WeightVector(std::move(out));
}

struct RootDatum::Data {
  GroupTag tag;
  std::size_t rank;
  std::vector<std::vector<Rational>> gram;
  std::vector<WeightVector> positive;
  std::vector<WeightVector> simple;
  std::vector<WeylElement> weyl;
};

namespace {

Rational gram_pairing(const std::vector<std::vector<Rational>>& g, const WeightVector& a,
                      const WeightVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j)
      if (g[i][j] != 0) s += a[i] * g[i][j] * b[j];
  return s;
}

WeightVector gram_reflect(const std::vector<std::vector<Rational>>& g, const WeightVector& x,
                          const WeightVector& alpha) {
  Rational c = 2 * gram_pairing(g, x, alpha) / gram_pairing(g, alpha, alpha);
  return x - c * alpha;
}

// Closes the simple reflections under multiplication; lengths are BFS depths.
std::vector<WeylElement> enumerate_weyl(const std::vector<std::vector<Rational>>& g,
                                        const std::vector<WeightVector>& simple, std::size_t r) {
  std::vector<std::vector<IntVector>> gens;
  for (const auto& alpha : simple) {
    std::vector<IntVector> m(r, IntVector(r));
    for (std::size_t j = 0; j < r; ++j) {
      WeightVector e = WeightVector::zero(r);
      e[j] = 1;
      WeightVector col = gram_reflect(g, e, alpha);
      for (std::size_t i = 0; i < r; ++i) m[i][j] = to_int64(col[i]);
    }
    gens.push_back(std::move(m));
  }
  auto mul = [r](const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
    std::vector<IntVector> c(r, IntVector(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  std::vector<IntVector> id(r, IntVector(r));
  for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
  std::map<std::vector<IntVector>, int> seen{{id, 0}};
  std::deque<std::vector<IntVector>> queue{id};
  std::vector<WeylElement> out{{id, 0}};
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    int len = seen[w];
    for (const auto& s : gens) {
      auto sw = mul(s, w);
      if (seen.count(sw)) continue;
      seen[sw] = len + 1;
      out.push_back({sw, len + 1});
      queue.push_back(sw);
    }
  }
  return out;
}

std::shared_ptr<RootDatum::Data> make_data(GroupTag tag, std::size_t rank,
                                           std::vector<std::vector<Rational>> gram,
                                           std::vector<WeightVector> positive,
                                           std::vector<WeightVector> simple) {
  auto d = std::make_shared<RootDatum::Data>();
  d->tag = tag;
  d->rank = rank;
  d->gram = std::move(gram);
  d->positive = std::move(positive);
  d->simple = std::move(simple);
  d->weyl = enumerate_weyl(d->gram, d->simple, rank);
  return d;
}

std::vector<std::vector<Rational>> identity_gram(std::size_t r) {
  std::vector<std::vector<Rational>> g(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i) g[i][i] = 1;
  return g;
}

std::size_t rational_rank(std::vector<WeightVector> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].rank();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[rank][c];
      rows[i] -= f * rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::string label_for(std::size_t root_count) {
  switch (root_count) {
    case 0: return "0";
    case 1: return "su(2)";
    case 3: return "su(3)";
    default: return std::to_string(root_count) + " roots";
  }
}

}  // namespace

RootDatum RootDatum::torus(std::size_t rank) {
  if (rank == 0) throw ParseError("torus rank must be positive");
  return RootDatum(make_data(GroupTag::Torus, rank, identity_gram(rank), {}, {}));
}

RootDatum RootDatum::su2() {
  static const auto d = make_data(GroupTag::SU2, 1, {{frac(1, 2)}}, {WeightVector{2}}, {WeightVector{2}});
  return RootDatum(d);
}

RootDatum RootDatum::u2() {
  static const auto d = make_data(GroupTag::U2, 2, identity_gram(2), {WeightVector{1, -1}},
                                  {WeightVector{1, -1}});
  return RootDatum(d);
}

RootDatum RootDatum::su3() {
  static const auto d = make_data(
      GroupTag::SU3, 2, {{frac(2, 3), frac(1, 3)}, {frac(1, 3), frac(2, 3)}},
      {WeightVector{2, -1}, WeightVector{-1, 2}, WeightVector{1, 1}},
      {WeightVector{2, -1}, WeightVector{-1, 2}});
  return RootDatum(d);
}

RootDatum RootDatum::from_tag(std::string_view tag) {
  std::string t(tag);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "su2") return su2();
  if (t == "u2") return u2();
  if (t == "su3") return su3();
  if (t.rfind("torus:", 0) == 0) {
    std::string n = t.substr(6);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || n.size() > 2)
      throw ParseError("bad torus rank in group tag: " + std::string(tag));
    return torus(std::stoul(n));
  }
  throw ParseError("unknown group tag: " + std::string(tag));
}

GroupTag RootDatum::tag() const { return d_->tag; }

std::string RootDatum::name() const {
  switch (d_->tag) {
    case GroupTag::Torus: return "torus:" + std::to_string(d_->rank);
    case GroupTag::SU2: return "su2";
    case GroupTag::U2: return "u2";
    case GroupTag::SU3: return "su3";
  }
  return "";
}

std::size_t RootDatum::rank() const { return d_->rank; }
const std::vector<WeightVector>& RootDatum::positive_roots() const { return d_->positive; }
const std::vector<WeightVector>& RootDatum::simple_roots() const { return d_->simple; }
const std::vector<WeylElement>& RootDatum::weyl_group() const { return d_->weyl; }
const std::vector<std::vector<Rational>>& RootDatum::gram() const { return d_->gram; }

Rational RootDatum::pairing(const WeightVector& a, const WeightVector& b) const {
  if (a.rank() != d_->rank || b.rank() != d_->rank)
    throw PreconditionViolated("weight rank does not match " + name());
  return gram_pairing(d_->gram, a, b);
}

WeightVector RootDatum::reflect(const WeightVector& x, const WeightVector& alpha) const {
  return gram_reflect(d_->gram, x, alpha);
}

bool RootDatum::is_dominant(const WeightVector& x) const {
  for (const auto& a : d_->simple)
    if (pairing(x, a) < 0) return false;
  return true;
}

bool RootDatum::is_strictly_dominant(const WeightVector& x) const {
  for (const auto& a : d_->simple)
    if (pairing(x, a) <= 0) return false;
  return true;
}

bool RootDatum::is_regular(const WeightVector& x) const {
  for (const auto& a : d_->positive)
    if (pairing(x, a) == 0) return false;
  return true;
}

nlohmann::json to_json_value(const RootDatum& d) {
  nlohmann::json j;
  switch (d.tag()) {
    case GroupTag::Torus:
      j["group"] = "torus";
      j["rank"] = d.rank();
      break;
    default:
      j["group"] = d.name();
  }
  return j;
}

RootDatum root_datum_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("group") || !j["group"].is_string())
    throw ParseError("root datum JSON needs a \"group\" string");
  std::string g = j["group"].get<std::string>();
  if (g == "torus") {
    if (!j.contains("rank") || !j["rank"].is_number_unsigned()) throw ParseError("torus needs a rank");
    return RootDatum::torus(j["rank"].get<std::size_t>());
  }
  return RootDatum::from_tag(g);
}

WeightVector rho(const RootDatum& datum) {
  WeightVector s = WeightVector::zero(datum.rank());
  for (const auto& a : datum.positive_roots()) s += a;
  return frac(1, 2) * s;
}

LeviClass stabilizer_levi(const WeightVector& xi, const RootDatum& datum) {
  LeviClass out;
  for (const auto& a : datum.positive_roots())
    if (datum.pairing(a, xi) == 0) out.roots.push_back(a);
  out.center_dim = datum.rank() - rational_rank(out.roots);
  out.semisimple_label = label_for(out.roots.size());
  return out;
}

std::vector<LeviClass> levi_classes(const RootDatum& datum) {
  std::vector<LeviClass> out;
  const std::size_t r = datum.rank();
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    WeightVector xi = WeightVector::zero(r);
    for (std::size_t i = 0; i < r; ++i) xi[i] = (mask >> i) & 1;
    if (!datum.is_dominant(xi)) continue;
    LeviClass c = stabilizer_levi(xi, datum);
    bool dup = std::any_of(out.begin(), out.end(), [&](const LeviClass& o) { return o.conjugate_to(c); });
    if (!dup) out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const LeviClass& a, const LeviClass& b) { return a.roots.size() < b.roots.size(); });
  return out;
}

std::optional<WeylNormalForm> weyl_normalize(const WeightVector& xi, const RootDatum& datum) {
  if (!datum.is_regular(xi)) return std::nullopt;
  WeylNormalForm out{1, xi};
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& a : datum.simple_roots()) {
      if (datum.pairing(out.dominant, a) < 0) {
        out.dominant = datum.reflect(out.dominant, a);
        out.sign = -out.sign;
        moved = true;
      }
    }
  }
  return out;
}

WeightVector dominant_representative(const WeightVector& xi, const RootDatum& datum) {
  WeightVector x = xi;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& a : datum.simple_roots()) {
      if (datum.pairing(x, a) < 0) {
        x = datum.reflect(x, a);
        moved = true;
      }
    }
  }
  return x;
}

Rational normalized_trace(const std::vector<WeightVector>& weights, const WeightVector& b,
                          const RootDatum& datum) {
  Rational s = 0;
  for (const auto& w : weights) s += abs(datum.pairing(w, b));
  return s;
}

}  // namespace spincq
