#include "spincq/reduction.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <thread>

#include "spincq/errors.hpp"
#include "spincq/examples_catalog.hpp"

namespace spincq {

std::int64_t qspin_point(const ReducedFiberModel& fiber, const WeightVector& mu) {
  std::int64_t total = 0;
  for (const auto& p : fiber.points) {
    if (p.stabilizer_order < 1) throw PreconditionViolated("stabilizer order must be positive");
    if (p.orientation != 1 && p.orientation != -1) throw PreconditionViolated("orientation must be ±1");
    if (p.stabilizer_order > 1) {
      Rational v = dot(p.gamma_cocharacter, (p.half_det_weight - mu).coords());
      if (!is_integer(v)) throw PreconditionViolated("weight is not a character of the stabilizer");
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), v.get_num_mpz_t(), static_cast<unsigned long>(p.stabilizer_order));
      if (r != 0) continue;
    }
    total += p.orientation;
  }
  return total;
}

std::vector<Covector> default_epsilons(std::size_t rank) {
  if (rank == 1) return {{frac(1, 97)}, {frac(-1, 89)}};
  std::vector<Covector> out(2, Covector(rank));
  const long a[] = {97, 89, 83, 79, 73, 71};
  const long b[] = {101, 103, 107, 109, 113, 127};
  for (std::size_t i = 0; i < rank; ++i) {
    out[0][i] = frac(1, a[i % 6] + 200 * static_cast<long>(i / 6));
    out[1][i] = frac(i % 2 ? 1 : -1, b[i % 6] + 200 * static_cast<long>(i / 6));
  }
  return out;
}

std::int64_t residual_at(const FixedPointModel& m, const FormalCharacter& global, const IntVector& mu,
                         std::size_t* absorbed) {
  std::int64_t value = mult_at(global, mu);
  WeightVector level = WeightVector::from_ints(mu);
  std::size_t kept = 0;
  for (const auto& p : m.points) {
    if (p.phi == level) {
      ++kept;
      continue;
    }
    Covector beta = (p.phi - level).coords();
    if (!is_generic_for(p, beta)) {
      // degenerate isolated zero of the Kirwan field; d > 0 there, so it is left in the residual
      ++kept;
      continue;
    }
    value -= term_mult_at(local_term(p, beta), mu);
  }
  if (absorbed) *absorbed = kept;
  return value;
}

std::vector<ProfileEntry> reduced_profile(const FixedPointModel& m, const IntBox& box, const ProfileOptions& opts) {
  if (box.rank() != m.rank) throw PreconditionViolated("box rank does not match model");
  FormalCharacter global = global_index(m, generic_polarization(m));
  auto eps = opts.epsilons.empty() ? default_epsilons(m.rank) : opts.epsilons;
  auto pts = box.points();
  std::vector<ProfileEntry> out(pts.size());
  auto work = [&](std::size_t i) {
    ProfileEntry& e = out[i];
    e.mu = pts[i];
    e.residual = residual_at(m, global, e.mu, &e.absorbed_points);
    WeightVector mu = WeightVector::from_ints(e.mu);
    if (opts.in_relint) e.in_relint = opts.in_relint(e.mu);
    if (opts.fibers)
      for (const auto& ep : eps) {
        auto fiber = opts.fibers(mu + WeightVector(ep));
        if (fiber) e.fiber_values.push_back(qspin_point(*fiber, mu));
      }
    if (e.in_relint && !*e.in_relint) e.value = 0;
    else if (!e.fiber_values.empty()) e.value = e.fiber_values.front();
    else e.value = e.residual;
    e.consistent = e.residual == e.value;
    for (auto v : e.fiber_values) e.consistent = e.consistent && v == e.value;
  };
  unsigned n = std::min<std::size_t>(worker_count(opts.threads), std::max<std::size_t>(pts.size(), 1));
  bool callbacks = opts.fibers || opts.in_relint;
  if (n <= 1 || callbacks) {
    // user callbacks are not assumed thread-safe
    for (std::size_t i = 0; i < pts.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < pts.size(); i += n) work(i);
      });
    for (auto& th : pool) th.join();
  }
  return out;
}

QRReport verify_qr_abelian(const FixedPointModel& m, const IntBox& box, const ProfileOptions& opts) {
  QRReport rep;
  if (m.points.empty() && m.free_components.empty()) return rep;
  FormalCharacter global = global_index(m, generic_polarization(m));
  for (const auto& e : reduced_profile(m, box, opts)) {
    QRRow row{e.mu, mult_at(global, e.mu), e.value, false};
    row.match = row.m == row.q && e.consistent;
    rep.summary = rep.summary && row.match;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string QRReport::to_csv() const {
  std::ostringstream out;
  std::size_t r = rows.empty() ? 1 : rows.front().mu.size();
  for (std::size_t i = 0; i < r; ++i) out << "mu" << (i + 1) << ",";
  out << "m,q,match\n";
  for (const auto& row : rows) {
    for (auto x : row.mu) out << x << ",";
    out << row.m << "," << row.q << "," << (row.match ? "true" : "false") << "\n";
  }
  return out.str();
}

std::string QRReport::to_table() const {
  std::ostringstream out;
  out << std::left << std::setw(16) << "mu" << std::right << std::setw(8) << "m" << std::setw(8) << "q"
      << std::setw(8) << "match" << "\n";
  for (const auto& row : rows) {
    std::string mu = "(";
    for (std::size_t i = 0; i < row.mu.size(); ++i) mu += (i ? ", " : "") + std::to_string(row.mu[i]);
    mu += ")";
    out << std::left << std::setw(16) << mu << std::right << std::setw(8) << row.m << std::setw(8) << row.q
        << std::setw(8) << (row.match ? "yes" : "NO") << "\n";
  }
  out << "summary: " << (summary ? "all levels match" : "MISMATCH") << "\n";
  return out.str();
}

AncestorMultiplicity multiplicity_via_ancestors(const AncestorSliceProvider& slices, const CoadjointOrbit& o,
                                                const std::optional<LeviClass>& h) {
  AncestorMultiplicity out;
  for (const auto& p : ancestors_of(o, h)) {
    auto slice = slices(p);
    if (!slice) throw MissingAncestorData("no slice data for ancestor " + to_string(p.rep()));
    std::int64_t q = qspin_point(slice->fiber, slice->level);
    out.total += q;
    out.parts.push_back({p, q});
  }
  return out;
}

std::string KirwanSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) s += " u ";
    const auto& g = segments[i];
    if (g.from == g.to) s += "{" + spincq::to_string(g.from) + "}";
    else s += "[" + spincq::to_string(g.from) + ", " + spincq::to_string(g.to) + "]";
  }
  return s;
}

nlohmann::json KirwanSet::to_json() const {
  auto j = nlohmann::json::array();
  for (const auto& g : segments) j.push_back({{"from", to_json_value(g.from)}, {"to", to_json_value(g.to)}});
  return j;
}

KirwanSet kirwan_image(const ExampleDescriptor& desc) { return build(desc).moment_image; }

namespace {

// Solves D c = v for square D given by columns; returns nullopt if singular. det is written out.
std::optional<std::vector<Rational>> solve_columns(const std::vector<IntVector>& cols, const Covector& v,
                                                   Rational& det) {
  const std::size_t n = v.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(cols[j][i]);
    a[i][n] = v[i];
  }
  det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) {
      det = 0;
      return std::nullopt;
    }
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace

std::int64_t dh_density(const FixedPointModel& m, const Covector& query) {
  m.validate();
  if (query.size() != m.rank) throw PreconditionViolated("query has wrong rank");
  Covector beta = generic_polarization(m);
  std::int64_t total = 0;
  for (const auto& p : m.points) {
    if (p.tangent_weights.size() != m.rank)
      throw PreconditionViolated("density needs a toric model (one tangent weight per torus direction)");
    int sg = p.orientation;
    std::vector<IntVector> dirs;
    for (auto a : p.tangent_weights) {
      if (dot(a, beta) > 0) {
        sg = -sg;
      } else {
        for (auto& x : a) x = -x;
      }
      dirs.push_back(a);
    }
    Covector rel(m.rank);
    for (std::size_t i = 0; i < m.rank; ++i) rel[i] = query[i] - p.phi[i];
    Rational det;
    auto c = solve_columns(dirs, rel, det);
    if (!c) throw PreconditionViolated("tangent weights at " + p.id + " are linearly dependent");
    if (abs(det) != 1) throw PreconditionViolated("tangent cone at " + p.id + " is not unimodular");
    bool inside = true;
    for (const auto& x : *c) {
      if (x == 0) throw OnWall("query lies on a wall of the cone at " + p.id);
      if (x < 0) inside = false;
    }
    if (inside) total += sg;
  }
  return total;
}

RasterGrid RasterGrid::parse(std::string_view text) {
  std::string s(text);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto c = s.find(':', start);
    parts.push_back(s.substr(start, c - start));
    if (c == std::string::npos) break;
    start = c + 1;
  }
  if (parts.size() != 3) throw ParseError("grid must be lo:hi:step, got \"" + s + "\"");
  RasterGrid g{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
  if (g.step <= 0 || g.hi < g.lo) throw ParseError("grid needs lo <= hi and step > 0");
  if (g.samples() > 4096) throw ParseError("grid too fine (more than 4096 samples per axis)");
  return g;
}

std::size_t RasterGrid::samples() const { return static_cast<std::size_t>(floor_int((hi - lo) / step)) + 1; }

DhRaster dh_raster(const FixedPointModel& m, const RasterGrid& grid) {
  if (m.rank != 1 && m.rank != 2) throw PreconditionViolated("rasters need a rank 1 or 2 model");
  DhRaster r;
  r.width = grid.samples();
  r.height = m.rank == 2 ? r.width : 1;
  r.values.resize(r.width * r.height);
  // sample slightly off the grid so lattice-aligned walls are never hit
  const Rational nudge[2][2] = {{grid.step / 997, grid.step / 1009}, {-grid.step / 983, grid.step / 1013}};
  for (std::size_t row = 0; row < r.height; ++row)
    for (std::size_t col = 0; col < r.width; ++col) {
      Covector q{grid.lo + grid.step * static_cast<long>(col)};
      if (m.rank == 2) q.push_back(grid.lo + grid.step * static_cast<long>(r.height - 1 - row));
      std::int64_t v = 0;
      for (const auto& nd : nudge) {
        Covector qq = q;
        for (std::size_t i = 0; i < qq.size(); ++i) qq[i] += nd[i];
        try {
          v = dh_density(m, qq);
          break;
        } catch (const OnWall&) {
        }
      }
      r.values[row * r.width + col] = v;
    }
  return r;
}

std::string to_pgm(const DhRaster& r) {
  std::ostringstream out;
  out << "P2\n# signed density: 0 = -1, 128 = 0, 255 = +1\n" << r.width << " " << r.height << "\n255\n";
  for (std::size_t row = 0; row < r.height; ++row) {
    for (std::size_t col = 0; col < r.width; ++col) {
      std::int64_t v = std::clamp<std::int64_t>(128 + 127 * r.values[row * r.width + col], 0, 255);
      out << (col ? " " : "") << v;
    }
    out << "\n";
  }
  return out.str();
}

std::string to_svg(const DhRaster& r, const RasterGrid& grid) {
  const std::size_t px = 8;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << r.width * px << "\" height=\"" << r.height * px
      << "\" viewBox=\"0 0 " << r.width * px << " " << r.height * px << "\">\n";
  out << "<title>signed density on [" << to_string(grid.lo) << ", " << to_string(grid.hi) << "] step "
      << to_string(grid.step) << "</title>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t row = 0; row < r.height; ++row)
    for (std::size_t col = 0; col < r.width; ++col) {
      std::int64_t v = r.values[row * r.width + col];
      if (v == 0) continue;
      out << "<rect x=\"" << col * px << "\" y=\"" << row * px << "\" width=\"" << px << "\" height=\"" << px
          << "\" fill=\"" << (v > 0 ? "#c0392b" : "#2e6fb7") << "\" fill-opacity=\""
          << (std::abs(v) > 1 ? "1" : "0.8") << "\"/>\n";
    }
  out << "</svg>\n";
  return out.str();
}

}  // namespace spincq
