#include "spincq/examples_catalog.hpp"

#include <algorithm>
#include <map>

#include "spincq/errors.hpp"

namespace spincq {

namespace {

struct Named {
  const char* name;
  ExampleKind kind;
  std::size_t arity;
};

constexpr Named kNames[] = {
    {"p1", ExampleKind::P1, 1},
    {"p1_deformed", ExampleKind::P1Deformed, 2},
    {"product_p1", ExampleKind::ProductP1, 0},
    {"hirzebruch", ExampleKind::Hirzebruch, 2},
    {"su3_flag", ExampleKind::SU3Flag, 2},
};

}  // namespace

ExampleDescriptor ExampleDescriptor::parse(std::string_view text) {
  std::string s(text);
  auto colon = s.find(':');
  std::string name = s.substr(0, colon);
  std::vector<std::int64_t> params;
  if (colon != std::string::npos) {
    std::string rest = s.substr(colon + 1);
    std::size_t start = 0;
    while (true) {
      auto comma = rest.find(',', start);
      std::string tok = rest.substr(start, comma - start);
      try {
        std::size_t used = 0;
        params.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw UnknownDescriptor("bad example parameter \"" + tok + "\" in \"" + s + "\"");
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  for (const auto& n : kNames) {
    if (name != n.name) continue;
    if (params.size() != n.arity)
      throw UnknownDescriptor("example \"" + name + "\" takes " + std::to_string(n.arity) + " parameter(s)");
    if (std::any_of(params.begin(), params.end(), [](std::int64_t p) { return p < -1000 || p > 1000; }))
      throw UnknownDescriptor("example parameters must lie in [-1000, 1000]");
    return ExampleDescriptor{n.kind, params};
  }
  throw UnknownDescriptor("unknown example \"" + s + "\"");
}

std::string ExampleDescriptor::to_string() const {
  std::string s;
  for (const auto& n : kNames)
    if (n.kind == kind) s = n.name;
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : ":") + std::to_string(params[i]);
  return s;
}

namespace {

FixedPoint point(std::string id, std::vector<IntVector> tangent, WeightVector s, int orientation = 1) {
  FixedPoint p;
  p.id = std::move(id);
  p.tangent_weights = std::move(tangent);
  p.s_weight = s;
  p.phi = std::move(s);
  p.orientation = orientation;
  return p;
}

// A monotone piece of a moment map on [0,1]: values at its ends, in increasing x.
struct Piece {
  Rational from, to;
};

// Counts preimages on each monotone piece; orientation is the sign of Φ' against the weight +1 at x = 1.
ReducedFiberModel fold_fiber(const std::vector<Piece>& pieces, const Rational& level, const WeightVector& mu) {
  ReducedFiberModel f;
  for (const auto& pc : pieces) {
    Rational lo = std::min(pc.from, pc.to), hi = std::max(pc.from, pc.to);
    if (lo < level && level < hi) f.points.push_back({pc.to > pc.from ? 1 : -1, 1, mu, {}});
  }
  return f;
}

// Zeros of the Kirwan field on invariant spheres joining fixed points p, q with weights a, -a.
std::vector<FreeComponent> sphere_circles(const FixedPointModel& m) {
  std::vector<FreeComponent> out;
  auto add = [&](const WeightVector& level) {
    for (const auto& f : out)
      if (f.phi == level) return;
    out.push_back({level.is_zero() ? "0" : to_string(level), level});
  };
  for (std::size_t i = 0; i < m.points.size(); ++i)
    for (std::size_t j = i + 1; j < m.points.size(); ++j) {
      const auto& p = m.points[i];
      const auto& q = m.points[j];
      for (const auto& a : p.tangent_weights) {
        IntVector na = a;
        for (auto& x : na) x = -x;
        if (std::find(q.tangent_weights.begin(), q.tangent_weights.end(), na) == q.tangent_weights.end()) continue;
        WeightVector d = q.phi - p.phi;
        WeightVector av = WeightVector::from_ints(a);
        Rational aa = dot(a, av.coords());
        Rational t = dot(a, d.coords()) / aa;
        if (t == 0 || d != t * av) continue;
        Rational u = -dot(a, p.phi.coords()) / (t * aa);
        if (u > 0 && u < 1) add(p.phi + u * d);
      }
    }
  return out;
}

IntBox hull_window(const std::vector<WeightVector>& pts, std::int64_t margin) {
  const std::size_t r = pts.front().rank();
  IntBox b{IntVector(r), IntVector(r)};
  for (std::size_t i = 0; i < r; ++i) {
    Rational lo = pts.front()[i], hi = pts.front()[i];
    for (const auto& p : pts) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    b.lo[i] = floor_int(lo) - margin;
    b.hi[i] = ceil_int(hi) + margin;
  }
  return b;
}

ExampleBundle build_p1(const ExampleDescriptor& desc, bool deformed) {
  const std::int64_t n = desc.params[0];
  const Rational top = Rational(static_cast<long>(n)) + frac(1, 2);
  ExampleBundle b;
  b.descriptor = desc;
  b.group = RootDatum::torus(1);
  b.generic_stabilizer = LeviClass{{}, 1, "0"};
  b.torus_model.rank = 1;
  b.torus_model.points = {point("south", {{-1}}, WeightVector{frac(-1, 2)}),
                          point("north", {{1}}, WeightVector{top})};

  // Φ(x) = -1/2 + (n+1)x - f·x(1-x), x = |z1|²/|z|²
  std::vector<Piece> pieces;
  Rational lo = std::min(frac(-1, 2), top), hi = std::max(frac(-1, 2), top);
  if (!deformed) {
    if (n != -1) pieces.push_back({frac(-1, 2), top});
    b.torus_model.free_components = sphere_circles(b.torus_model);
  } else {
    const std::int64_t f = desc.params[1];
    auto phi = [&](const Rational& x) -> Rational {
      return frac(-1, 2) + Rational(static_cast<long>(n + 1)) * x - Rational(static_cast<long>(f)) * x * (1 - x);
    };
    Rational xs = f == 0 ? Rational(-1) : Rational(static_cast<long>(f - n - 1)) / Rational(static_cast<long>(2 * f));
    if (xs > 0 && xs < 1) {
      pieces.push_back({phi(0), phi(xs)});
      pieces.push_back({phi(xs), phi(1)});
      lo = std::min(lo, phi(xs));
      hi = std::max(hi, phi(xs));
    } else if (phi(0) != phi(1) || f != 0) {
      pieces.push_back({phi(0), phi(1)});
    }
    bool zero_level = std::any_of(pieces.begin(), pieces.end(), [](const Piece& pc) {
      return std::min(pc.from, pc.to) < 0 && 0 < std::max(pc.from, pc.to);
    });
    if (zero_level) b.torus_model.free_components.push_back({"0", WeightVector{0}});
  }

  b.torus_fibers = [pieces](const WeightVector& level) -> std::optional<ReducedFiberModel> {
    WeightVector mu{floor_int(level[0] + frac(1, 2))};
    return fold_fiber(pieces, level[0], mu);
  };
  b.torus_relint = [lo, hi](const IntVector& mu) {
    Rational x(static_cast<long>(mu[0]));
    return lo < x && x < hi;
  };
  b.moment_image.segments.push_back({WeightVector{lo}, WeightVector{hi}});
  b.window = hull_window({WeightVector{lo}, WeightVector{hi}}, 3);

  FormalCharacter g(1);
  if (n >= 0)
    for (std::int64_t k = 0; k <= n; ++k) g.add_monomial({k}, 1);
  else
    for (std::int64_t k = n + 1; k <= -1; ++k) g.add_monomial({k}, -1);
  b.golden_T = g;
  return b;
}

ExampleBundle build_product(const ExampleDescriptor& desc) {
  ExampleBundle b;
  b.descriptor = desc;
  b.group = RootDatum::torus(1);
  b.generic_stabilizer = LeviClass{{}, 1, "0"};
  b.torus_model.rank = 1;
  b.torus_model.points = {point("south,south", {{-1}, {-1}}, WeightVector{-1}),
                          point("south,north", {{-1}, {1}}, WeightVector{0}),
                          point("north,south", {{1}, {-1}}, WeightVector{0}),
                          point("north,north", {{1}, {1}}, WeightVector{1})};
  b.torus_model.free_components = {{"0", WeightVector{0}}};
  b.torus_relint = [](const IntVector& mu) { return mu[0] > -1 && mu[0] < 1; };
  b.moment_image.segments.push_back({WeightVector{-1}, WeightVector{1}});
  b.window = IntBox{{-4}, {4}};
  b.golden_T = FormalCharacter::monomial({0});
  return b;
}

// Flips of the complex structure on k/h seen from a point of the slice.
int q_flips(const RootDatum& g, const std::vector<WeightVector>& q_roots, const WeightVector& x) {
  int flips = 0;
  for (const auto& a : q_roots)
    if (g.pairing(a, x) < 0) ++flips;
  return flips;
}

std::vector<WeightVector> q_roots(const RootDatum& g, const WeightVector& rho_c) {
  std::vector<WeightVector> out;
  for (const auto& a : g.positive_roots())
    if (g.pairing(a, rho_c) > 0) out.push_back(a);
  return out;
}

ExampleBundle build_hirzebruch(const ExampleDescriptor& desc) {
  const std::int64_t n1 = desc.params[0], n2 = desc.params[1];
  const Rational h = frac(1, 2);
  ExampleBundle b;
  b.descriptor = desc;
  b.group = RootDatum::u2();
  b.generic_stabilizer = LeviClass{{}, 2, "0"};

  // T-fixed points [1,0,1,0], [1,0,0,1], [0,1,1,0], [0,1,0,1]; line weights
  // (n2-n1,0), (-n1,0), (0,n2-n1), (0,-n1) from L(n1,n2)|_Y ≅ L^{n2} ⊗ C_{0,-n1}.
  const Rational d = Rational(static_cast<long>(n2 - n1));
  const Rational m1 = Rational(static_cast<long>(-n1 - 1));
  b.torus_model.rank = 2;
  b.torus_model.points = {point("[1,0,1,0]", {{-1, 1}, {1, 0}}, WeightVector{d, h}),
                          point("[1,0,0,1]", {{-1, 1}, {-1, 0}}, WeightVector{m1, h}),
                          point("[0,1,1,0]", {{1, -1}, {0, 1}}, WeightVector{h, d}),
                          point("[0,1,0,1]", {{1, -1}, {0, -1}}, WeightVector{h, m1})};

  // Φ = c(φ)·k·e2* + ½(e1*+e2*), c(φ) = -(n1+3/2) + (n2+1)φ
  const Rational c0 = -(Rational(static_cast<long>(n1)) + frac(3, 2));
  const Rational c1 = c0 + Rational(static_cast<long>(n2 + 1));
  const Rational clo = std::min(c0, c1), chi = std::max(c0, c1);
  const int dir = n2 + 1 > 0 ? 1 : (n2 + 1 < 0 ? -1 : 0);

  b.torus_relint = [=](const IntVector& mu) {
    if (dir == 0) return false;
    Rational x = Rational(static_cast<long>(mu[0])) - h, y = Rational(static_cast<long>(mu[1])) - h;
    Rational c = x + y;
    if (c == 0) return false;
    Rational s = x / c;
    return s > 0 && s < 1 && clo < c && c < chi;
  };
  // T-reduction of the level ℓ: one point (k = s, φ) with c = ν1+ν2, s = ν1/c.
  // Orientation -sign(c)·sign(n2+1), fixed by the ample case (0,0).
  b.torus_fibers = [=](const WeightVector& level) -> std::optional<ReducedFiberModel> {
    ReducedFiberModel f;
    if (dir == 0) return f;
    Rational x = level[0] - h, y = level[1] - h;
    Rational c = x + y;
    if (c == 0) return f;
    Rational s = x / c;
    if (s > 0 && s < 1 && clo < c && c < chi) {
      WeightVector mu{floor_int(level[0] + h), floor_int(level[1] + h)};
      f.points.push_back({-sign(c) * dir, 1, mu, {}});
    }
    return f;
  };
  b.torus_model.free_components = sphere_circles(b.torus_model);
  if (b.torus_relint({0, 0})) b.torus_model.free_components.insert(b.torus_model.free_components.begin(),
                                                                  {"0", WeightVector{0, 0}});

  std::vector<WeightVector> corners{WeightVector{h, h}};
  for (const Rational& c : {c0, c1}) {
    corners.push_back(WeightVector{h + c, h});
    corners.push_back(WeightVector{h, h + c});
  }
  b.window = hull_window(corners, 3);
  if (clo <= 0) b.moment_image.segments.push_back({WeightVector{h, h + std::min(chi, Rational(0))}, WeightVector{h, h + clo}});
  if (chi >= 0) b.moment_image.segments.push_back({WeightVector{h + std::max(clo, Rational(0)), h}, WeightVector{h + chi, h}});

  InducedSlice s{RootDatum::u2(), LeviClass{{}, 2, "0"}, {}, WeightVector{h, -h}, WeightVector{0, 0}, {}};
  s.y_model.rank = 2;
  s.y_model.points = {point("y[0,1]", {{0, -1}}, WeightVector{0, Rational(static_cast<long>(-n1)) - h}),
                      point("y[1,0]", {{0, 1}}, WeightVector{0, d + h})};
  const std::int64_t span = std::abs(n1) + std::abs(n2) + 2;
  s.y_support = IntBox{{0, -span}, {0, span}};
  b.slice = s;

  // Ancestors of a regular orbit are the orbit itself. Y_C meets it on the line x = 1/2 (c < 0)
  // or, after the Weyl reflection, on y = 1/2 (c > 0); each component takes its own ε.
  const auto qr = q_roots(b.group, s.rho_c);
  const RootDatum group = b.group;
  b.ancestor_slices = [=](const CoadjointOrbit& p) -> std::optional<AncestorSlice> {
    AncestorSlice out{{}, p.rep()};
    if (dir == 0) return out;
    const WeightVector& l = p.rep();
    struct Comp {
      bool on;
      Rational c;
      Rational eps;
    };
    const Comp comps[] = {{l[0] == h, l[1] - h, frac(1, 97)}, {l[1] == h, l[0] - h, frac(1, 89)}};
    for (const auto& cp : comps) {
      if (!cp.on) continue;
      Rational c = cp.c + cp.eps;
      bool right_side = (cp.c < 0) == (&cp == &comps[0]);
      if (!right_side || !(clo < c && c < chi)) continue;
      WeightVector slice_point{0, cp.c};
      int flips = q_flips(group, qr, slice_point);
      out.fiber.points.push_back({dir * (flips % 2 ? -1 : 1), 1, l, {}});
    }
    return out;
  };

  if (n1 >= 0 && n2 >= 0) {
    CharacterK k(b.group);
    if (n1 >= n2) {
      for (std::int64_t j = n1 - n2; j <= n1; ++j) k.add(WeightVector{h, Rational(static_cast<long>(-j)) - h}, 1);
    } else {
      for (std::int64_t j = 0; j <= n1; ++j) k.add(WeightVector{h, Rational(static_cast<long>(-j)) - h}, 1);
      for (std::int64_t j = 0; j <= n2 - n1 - 2; ++j) k.add(WeightVector{Rational(static_cast<long>(j)) + frac(3, 2), h}, -1);
    }
    b.golden_K = k;
  }
  if (n1 == 0 && n2 == 0) b.golden_T = FormalCharacter::monomial({0, 0});
  if (n1 == 3 && n2 == 6) {
    // 1+t1⁻¹+t2⁻¹+t1⁻²+t1⁻¹t2⁻¹+t2⁻²+t1⁻³+t1⁻²t2⁻¹+t1⁻¹t2⁻²+t2⁻³-t1t2-t1t2²-t1²t2
    FormalCharacter g(2);
    const IntVector plus[] = {{0, 0}, {-1, 0}, {0, -1}, {-2, 0}, {-1, -1}, {0, -2}, {-3, 0}, {-2, -1}, {-1, -2}, {0, -3}};
    const IntVector minus[] = {{1, 1}, {1, 2}, {2, 1}};
    for (const auto& w : plus) g.add_monomial(w, 1);
    for (const auto& w : minus) g.add_monomial(w, -1);
    b.golden_T = g;
  }
  return b;
}

ExampleBundle build_su3_flag(const ExampleDescriptor& desc) {
  const std::int64_t a = desc.params[0], bb = desc.params[1];
  const Rational h = frac(1, 2);
  ExampleBundle b;
  b.descriptor = desc;
  b.group = RootDatum::su3();
  const LeviClass levi = stabilizer_levi(WeightVector{1, 0}, b.group);
  b.generic_stabilizer = levi;

  // Y ≅ P¹ with A_H = exp(Rω1); Φ_Y = c(φ)ω1 - ρ_C, c(φ) = (b+1) - (a+b-1)φ.
  InducedSlice s{b.group, levi, {}, WeightVector{frac(3, 2), 0}, WeightVector{-h, 1}, {}};
  s.y_model.rank = 2;
  s.y_model.points = {point("y0", {{-1, 0}}, WeightVector{Rational(static_cast<long>(bb)) - h, 0}),
                      point("y1", {{1, 0}}, WeightVector{h - Rational(static_cast<long>(a)), 0})};
  const std::int64_t span = std::abs(a) + std::abs(bb) + 2;
  s.y_support = IntBox{{-span, 0}, {span, 0}};
  b.slice = s;
  b.torus_model = induce_torus_model(s);

  const Rational c0(static_cast<long>(bb + 1)), c1(static_cast<long>(2 - a));
  const Rational clo = std::min(c0, c1), chi = std::max(c0, c1);
  const int dir = sign(c1 - c0);  // derivative of c against the weight +ω1 at φ = 1

  b.torus_model.free_components = sphere_circles(b.torus_model);
  if (clo < 0 && 0 < chi)
    b.torus_model.free_components.insert(b.torus_model.free_components.begin(), {"0", WeightVector{0, 0}});

  Rational big = std::max(abs(c0), abs(c1));
  b.window = hull_window({WeightVector{-big, -big}, WeightVector{big, big}}, 3);
  if (chi >= 0) b.moment_image.segments.push_back({WeightVector{std::max(clo, Rational(0)), 0}, WeightVector{chi, 0}});
  if (clo <= 0) b.moment_image.segments.push_back({WeightVector{0, -std::min(chi, Rational(0))}, WeightVector{0, -clo}});

  // Ancestors of class su(2) sit at cω1 (slice level c) or cω2 (slice level -c, Weyl-reflected).
  const auto qr = q_roots(b.group, s.rho_c);
  const RootDatum group = b.group;
  const LeviClass su2 = levi;
  b.ancestor_slices = [=](const CoadjointOrbit& p) -> std::optional<AncestorSlice> {
    AncestorSlice out{{}, p.rep()};
    if (!p.levi().conjugate_to(su2)) return std::nullopt;
    const WeightVector& l = p.rep();
    Rational level = l[1] == 0 ? l[0] : -l[1];
    Rational c = level + frac(1, 97);
    if (dir != 0 && clo < c && c < chi) {
      int flips = q_flips(group, qr, WeightVector{level, 0});
      out.fiber.points.push_back({dir * (flips % 2 ? -1 : 1), 1, l, {}});
    }
    return out;
  };

  if (a >= 4 && bb >= 1) {
    CharacterK k(b.group);
    for (std::int64_t j = 0; j <= bb - 1; ++j) k.add(WeightVector{Rational(static_cast<long>(j)) + 1, 1}, -1);
    for (std::int64_t j = 0; j <= a - 4; ++j) k.add(WeightVector{1, Rational(static_cast<long>(j)) + 1}, -1);
    b.golden_K = k;
  }
  return b;
}

}  // namespace

ExampleBundle build(const ExampleDescriptor& desc) {
  switch (desc.kind) {
    case ExampleKind::P1: return build_p1(desc, false);
    case ExampleKind::P1Deformed: return build_p1(desc, true);
    case ExampleKind::ProductP1: return build_product(desc);
    case ExampleKind::Hirzebruch: return build_hirzebruch(desc);
    case ExampleKind::SU3Flag: return build_su3_flag(desc);
  }
  throw UnknownDescriptor("unknown example kind");
}

ExampleBundle build(std::string_view desc) { return build(ExampleDescriptor::parse(desc)); }

FormalCharacter slice_index(const InducedSlice& s) {
  FormalCharacter g = global_index(s.y_model, generic_polarization(s.y_model));
  return g.truncated(s.y_support);
}

CharacterK induced_character(const InducedSlice& s) {
  return holomorphic_induct(slice_index(s), s.rho_c, s.group, s.rho_h);
}

FixedPointModel induce_torus_model(const InducedSlice& s) {
  const auto& g = s.group;
  const auto qr = q_roots(g, s.rho_c);
  std::vector<const WeylElement*> reps;
  std::vector<WeightVector> seen;
  for (const auto& w : g.weyl_group()) {
    WeightVector image = w.apply(s.rho_c);
    if (std::find(seen.begin(), seen.end(), image) != seen.end()) continue;
    seen.push_back(image);
    reps.push_back(&w);
  }
  FixedPointModel m;
  m.rank = g.rank();
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const auto& w = *reps[k];
    for (const auto& y : s.y_model.points) {
      std::vector<IntVector> tangent;
      for (const auto& a : y.tangent_weights) tangent.push_back(w.apply(WeightVector::from_ints(a)).to_ints());
      for (const auto& a : qr) tangent.push_back(w.apply(a).to_ints());
      m.points.push_back(point("w" + std::to_string(k) + "." + y.id, tangent, w.apply(y.s_weight + s.rho_c), y.orientation));
    }
  }
  return m;
}

std::vector<ExampleDescriptor> catalog_descriptors() {
  std::vector<ExampleDescriptor> out;
  for (const char* d : {"p1:-3", "p1:-1", "p1:0", "p1:4", "p1_deformed:4,15", "product_p1", "hirzebruch:8,5",
                        "hirzebruch:3,6", "hirzebruch:0,0", "su3_flag:4,1", "su3_flag:5,2", "su3_flag:6,3"})
    out.push_back(ExampleDescriptor::parse(d));
  return out;
}

}  // namespace spincq
