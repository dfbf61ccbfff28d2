#include "spincq/characters.hpp"

#include <cstdlib>
#include <sstream>
#include <thread>

#include "spincq/errors.hpp"

namespace spincq {

IntBox IntBox::cube(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  return IntBox{IntVector(rank, lo), IntVector(rank, hi)};
}

IntBox IntBox::parse(std::string_view text, std::size_t rank) {
  std::string s(text);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto comma = s.find(',', start);
    parts.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 1 && parts.size() != rank)
    throw ParseError("box \"" + s + "\" does not match rank " + std::to_string(rank));
  IntBox box;
  for (std::size_t i = 0; i < rank; ++i) {
    const std::string& p = parts.size() == 1 ? parts[0] : parts[i];
    auto colon = p.find(':', 1);  // skip a leading minus sign
    try {
      std::size_t used = 0;
      if (colon == std::string::npos) {
        std::int64_t r = std::stoll(p, &used);
        if (used != p.size() || r < 0) throw ParseError("");
        box.lo.push_back(-r);
        box.hi.push_back(r);
      } else {
        std::string a = p.substr(0, colon), b = p.substr(colon + 1);
        std::int64_t lo = std::stoll(a, &used);
        if (used != a.size()) throw ParseError("");
        std::int64_t hi = std::stoll(b, &used);
        if (used != b.size()) throw ParseError("");
        box.lo.push_back(lo);
        box.hi.push_back(hi);
      }
    } catch (const std::exception&) {
      throw ParseError("bad box component \"" + p + "\" (expected lo:hi or radius)");
    }
    if (box.lo.back() > box.hi.back()) throw ParseError("empty box component \"" + p + "\"");
  }
  return box;
}

std::size_t IntBox::size() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < rank(); ++i) n *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  return n;
}

bool IntBox::contains(const IntVector& p) const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  return true;
}

std::vector<IntVector> IntBox::points() const {
  std::vector<IntVector> out;
  out.reserve(size());
  IntVector cur = lo;
  const std::size_t r = rank();
  if (r == 0) return out;
  while (true) {
    out.push_back(cur);
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

IntBox IntBox::grown(std::int64_t margin) const {
  IntBox b = *this;
  for (auto& x : b.lo) x -= margin;
  for (auto& x : b.hi) x += margin;
  return b;
}

FormalCharacter FormalCharacter::monomial(const IntVector& w, std::int64_t mult) {
  FormalCharacter f(w.size());
  f.add_monomial(w, mult);
  return f;
}

void FormalCharacter::add_term(SeriesTerm t) {
  if (t.sign != 1 && t.sign != -1) throw PreconditionViolated("term sign must be ±1");
  if (t.offset.size() != rank_) throw PreconditionViolated("term offset has wrong rank");
  for (const auto& d : t.generators) {
    if (d.size() != rank_ || t.witness.size() != rank_)
      throw PreconditionViolated("term generator or witness has wrong rank");
    if (dot(d, t.witness) <= 0) throw PreconditionViolated("term generators are not polarized by the witness");
  }
  terms_.push_back(std::move(t));
}

void FormalCharacter::add_monomial(const IntVector& w, std::int64_t mult) {
  if (w.size() != rank_) throw PreconditionViolated("monomial has wrong rank");
  if (mult == 0) return;
  auto& m = tail_[w];
  m += mult;
  if (m == 0) tail_.erase(w);
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
  if (o.rank_ != rank_) throw PreconditionViolated("character rank mismatch");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  for (const auto& [w, m] : o.tail_) add_monomial(w, m);
  return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) { return *this += -o; }

FormalCharacter operator-(const FormalCharacter& a) {
  FormalCharacter out = a;
  for (auto& t : out.terms_) t.sign = -t.sign;
  for (auto& [w, m] : out.tail_) m = -m;
  return out;
}

FormalCharacter FormalCharacter::truncated(const IntBox& box) const {
  FormalCharacter out(rank_);
  for (const auto& p : box.points()) out.add_monomial(p, mult_at(*this, p));
  return out;
}

namespace {

// Integral rescaling of the witness so the enumeration bound is an integer division.
IntVector integral_witness(const Covector& w) {
  mpz_class l = 1;
  for (const auto& x : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  for (const auto& x : w) {
    mpz_class v = x.get_num() * (l / x.get_den());
    if (!v.fits_slong_p()) throw PreconditionViolated("polarization witness too large");
    out.push_back(v.get_si());
  }
  return out;
}

std::int64_t idot(const IntVector& a, const IntVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  if (s > INT64_MAX || s < INT64_MIN) throw PreconditionViolated("pairing overflow");
  return static_cast<std::int64_t>(s);
}

std::int64_t count_solutions(const std::vector<IntVector>& gens, const IntVector& costs, const IntVector& w,
                             std::size_t j, const IntVector& r) {
  const std::size_t m = gens.size();
  auto is_zero = [](const IntVector& v) {
    for (auto x : v)
      if (x) return false;
    return true;
  };
  if (j == m) return is_zero(r) ? 1 : 0;
  std::int64_t budget = idot(r, w);
  if (budget < 0) return 0;
  if (budget == 0) return is_zero(r) ? 1 : 0;
  const IntVector& d = gens[j];
  if (j + 1 == m) {
    std::size_t i = 0;
    while (d[i] == 0) ++i;
    if (r[i] % d[i] != 0) return 0;
    std::int64_t k = r[i] / d[i];
    if (k < 0) return 0;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (r[c] != k * d[c]) return 0;
    return 1;
  }
  std::int64_t total = 0;
  IntVector rest = r;
  for (std::int64_t k = 0; k * costs[j] <= budget; ++k) {
    total += count_solutions(gens, costs, w, j + 1, rest);
    for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= d[c];
  }
  return total;
}

}  // namespace

std::int64_t term_mult_at(const SeriesTerm& t, const IntVector& mu) {
  if (mu.size() != t.offset.size()) throw PreconditionViolated("weight has wrong rank");
  IntVector r(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) r[i] = mu[i] - t.offset[i];
  if (t.generators.empty()) return r == IntVector(mu.size(), 0) ? t.sign : 0;
  IntVector w = integral_witness(t.witness);
  IntVector costs;
  for (const auto& d : t.generators) costs.push_back(idot(d, w));
  return t.sign * count_solutions(t.generators, costs, w, 0, r);
}

std::int64_t mult_at(const FormalCharacter& f, const IntVector& mu) {
  if (mu.size() != f.rank()) throw PreconditionViolated("weight has wrong rank");
  std::int64_t s = 0;
  for (const auto& t : f.terms()) s += term_mult_at(t, mu);
  auto it = f.tail().find(mu);
  if (it != f.tail().end()) s += it->second;
  return s;
}

unsigned worker_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("SPINCQ_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 256) return static_cast<unsigned>(v);
  }
  return 1;
}

std::vector<std::int64_t> window(const FormalCharacter& f, const IntBox& box, unsigned threads) {
  auto pts = box.points();
  std::vector<std::int64_t> out(pts.size());
  unsigned n = std::min<std::size_t>(worker_count(threads), std::max<std::size_t>(pts.size(), 1));
  if (n <= 1) {
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = mult_at(f, pts[i]);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < pts.size(); i += n) out[i] = mult_at(f, pts[i]);
    });
  for (auto& th : pool) th.join();
  return out;
}

std::string window_csv(const FormalCharacter& f, const IntBox& box, unsigned threads) {
  auto vals = window(f, box, threads);
  auto pts = box.points();
  std::ostringstream out;
  for (std::size_t i = 0; i < box.rank(); ++i) out << "mu" << (i + 1) << ",";
  out << "mult\n";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (auto x : pts[k]) out << x << ",";
    out << vals[k] << "\n";
  }
  return out.str();
}

bool is_label(const WeightVector& label, const RootDatum& datum) {
  return label.rank() == datum.rank() && datum.is_strictly_dominant(label) &&
         (label - rho(datum)).is_integral();
}

void CharacterK::add(const WeightVector& label, std::int64_t mult) {
  if (!is_label(label, datum_))
    throw PreconditionViolated(to_string(label) + " is not a regular admissible label for " + datum_.name());
  if (mult == 0) return;
  auto& m = mults_[label];
  m += mult;
  if (m == 0) mults_.erase(label);
}

std::int64_t CharacterK::at(const WeightVector& label) const {
  auto it = mults_.find(label);
  return it == mults_.end() ? 0 : it->second;
}

CharacterK& CharacterK::operator+=(const CharacterK& o) {
  if (!(o.datum_ == datum_)) throw PreconditionViolated("characters of different groups");
  for (const auto& [l, m] : o.mults_) add(l, m);
  return *this;
}

CharacterK operator-(const CharacterK& a) {
  CharacterK out = a;
  for (auto& [l, m] : out.mults_) m = -m;
  return out;
}

namespace {

// Ways to write x (ω-coordinates) as a sum of positive roots of SU(3).
std::int64_t su3_partitions(const WeightVector& x) {
  Rational a = (2 * x[0] + x[1]) / 3;  // α1-coordinate
  Rational b = (x[0] + 2 * x[1]) / 3;  // α2-coordinate
  if (!is_integer(a) || !is_integer(b) || a < 0 || b < 0) return 0;
  std::int64_t na = to_int64(a), nb = to_int64(b);
  std::int64_t count = 0;
  for (std::int64_t k = 0; k <= std::min(na, nb); ++k) ++count;  // k copies of α1+α2
  return count;
}

}  // namespace

std::map<IntVector, std::int64_t> irreducible_weights(const WeightVector& label, const RootDatum& datum) {
  if (!is_label(label, datum)) throw PreconditionViolated(to_string(label) + " is not a label");
  std::map<IntVector, std::int64_t> out;
  switch (datum.tag()) {
    case GroupTag::Torus:
      out[label.to_ints()] = 1;
      break;
    case GroupTag::SU2: {
      std::int64_t m = to_int64(label[0]) - 1;
      for (std::int64_t j = 0; j <= m; ++j) out[{m - 2 * j}] += 1;
      break;
    }
    case GroupTag::U2: {
      std::int64_t n = to_int64(label[0] - label[1]);
      for (std::int64_t j = 0; j < n; ++j) {
        WeightVector w{label[0] - frac(1, 2) - j, label[1] + frac(1, 2) + j};
        out[w.to_ints()] += 1;
      }
      break;
    }
    case GroupTag::SU3: {
      WeightVector rh = rho(datum);
      WeightVector hw = label - rh;
      std::int64_t top = to_int64(hw[0] + hw[1]);
      for (std::int64_t a = 0; a <= top; ++a)
        for (std::int64_t b = 0; b <= top; ++b) {
          WeightVector mu{hw[0] - 2 * a + b, hw[1] + a - 2 * b};
          std::int64_t m = 0;
          for (const auto& w : datum.weyl_group())
            m += w.sign() * su3_partitions(w.apply(label) - mu - rh);
          if (m) out[mu.to_ints()] += m;
        }
      break;
    }
  }
  return out;
}

FormalCharacter restrict_to_torus(const CharacterK& c) {
  FormalCharacter out(c.datum().rank());
  for (const auto& [label, m] : c.mults())
    for (const auto& [w, k] : irreducible_weights(label, c.datum())) out.add_monomial(w, m * k);
  return out;
}

CharacterK holomorphic_induct(const FormalCharacter& h_weights, const WeightVector& rho_c,
                              const RootDatum& datum, const WeightVector& rho_h) {
  if (!h_weights.is_finite()) throw InfiniteSupport("holomorphic induction needs a finite H-character");
  WeightVector shift_by = rho_c + (rho_h.rank() == 0 ? WeightVector::zero(datum.rank()) : rho_h);
  CharacterK out(datum);
  for (const auto& [nu, m] : h_weights.tail()) {
    auto nf = weyl_normalize(WeightVector::from_ints(nu) + shift_by, datum);
    if (!nf) continue;
    out.add(nf->dominant, nf->sign * m);
  }
  return out;
}

std::int64_t coefficient(const CharacterK& c, const CoadjointOrbit& o) {
  if (!o.is_regular() || !is_admissible(o)) throw PreconditionViolated("coefficient needs a regular admissible orbit");
  return c.at(o.rep());
}

nlohmann::json to_json_value(const CharacterK& c) {
  auto j = nlohmann::json::array();
  for (const auto& [l, m] : c.mults()) j.push_back({{"label", to_json_value(l)}, {"mult", m}});
  return j;
}

CharacterK character_from_json(const nlohmann::json& j, const RootDatum& datum) {
  if (!j.is_array()) throw ParseError("character JSON must be an array");
  CharacterK c(datum);
  for (const auto& e : j) c.add(weight_from_json(e.at("label")), e.at("mult").get<std::int64_t>());
  return c;
}

std::string to_string(const CharacterK& c) {
  if (c.mults().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [l, m] : c.mults()) {
    if (!first) out << (m < 0 ? " - " : " + ");
    else if (m < 0) out << "-";
    first = false;
    auto am = m < 0 ? -m : m;
    if (am != 1) out << am << "*";
    out << "pi" << to_string(l);
  }
  return out.str();
}

}  // namespace spincq
