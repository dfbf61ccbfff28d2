// spincq: orbit listings, indices, [Q,R]=0 checks and figure data for the example catalog.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spincq/errors.hpp"
#include "spincq/examples_catalog.hpp"

using namespace spincq;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;
constexpr int kExitMath = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string group = "su3";
  std::string example;
  std::string box;
  std::string grid = "-5:5:0.25";
  std::string format;
  std::string output;
  std::string ancestors_of;
  std::string levi;
  std::uint64_t seed = 1;
  std::size_t pairs = 10000;
  std::int64_t radius = 6;
};

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  std::string msg = "format \"" + f + "\" not supported here; use one of:";
  for (const char* a : allowed) msg += std::string(" ") + a;
  throw ConfigError(msg);
}

RootDatum group_of(const std::string& tag) {
  try {
    return RootDatum::from_tag(tag);
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
}

ExampleBundle bundle_of(const std::string& desc) {
  if (desc.empty()) throw ConfigError("--example is required");
  try {
    return build(desc);
  } catch (const UnknownDescriptor& e) {
    throw ConfigError(e.what());
  }
}

IntBox box_of(const RunConfig& c, const ExampleBundle& b) {
  if (c.box.empty()) return b.window;
  try {
    return IntBox::parse(c.box, b.torus_model.rank);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

WeightVector weight_arg(const std::string& text, const RootDatum& g) {
  if (text == "rho") return rho(g);
  if (text == "0") return WeightVector::zero(g.rank());
  WeightVector w;
  try {
    w = parse_weight(text);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (w.rank() != g.rank()) throw ConfigError("weight " + text + " has the wrong rank for " + g.name());
  return w;
}

std::string qspin_text(const CoadjointOrbit& o) {
  auto q = qspin_orbit(o);
  return q.is_zero() ? "0" : "pi" + to_string(*q.label);
}

std::string cmd_orbits(const RunConfig& c) {
  RootDatum g = group_of(c.group);
  std::string format = c.format.empty() ? "table" : c.format;
  check_format(format, {"table", "csv", "json", "dot"});
  std::int64_t radius = 3;
  if (!c.box.empty()) {
    try {
      radius = std::stoll(c.box);
    } catch (const std::exception&) {
      throw ConfigError("--box for orbits is a radius, got \"" + c.box + "\"");
    }
    if (radius < 0 || radius > 40) throw ConfigError("--box radius must lie in [0, 40]");
  }
  RationalBox box = RationalBox::cube(g.rank(), Rational(static_cast<long>(radius)));
  if (format == "dot") return ancestor_graph_dot(g, box);

  std::vector<CoadjointOrbit> rows;
  if (!c.ancestors_of.empty()) {
    auto o = CoadjointOrbit::through(weight_arg(c.ancestors_of, g), g);
    std::optional<LeviClass> h;
    if (!c.levi.empty()) {
      for (const auto& l : levi_classes(g))
        if (l.semisimple_label == c.levi) h = l;
      if (!h) throw ConfigError("no Levi class \"" + c.levi + "\" in " + g.name());
    }
    try {
      rows = ancestors_of(o, h);
    } catch (const PreconditionViolated& e) {
      throw ConfigError(e.what());
    }
  } else {
    rows = admissible_orbits_in_box(g, box);
  }

  std::ostringstream out;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& o : rows) j.push_back(orbit_to_json(o));
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "rep,levi,shift,qspin\n";
    for (const auto& o : rows)
      out << '"' << to_string(o.rep()) << "\"," << o.levi().semisimple_label << ",\"" << to_string(shift(o).rep())
          << "\"," << '"' << qspin_text(o) << "\"\n";
  } else {
    out << std::left << std::setw(22) << "rep" << std::setw(8) << "levi" << std::setw(22) << "shift"
        << "qspin\n";
    for (const auto& o : rows)
      out << std::setw(22) << to_string(o.rep()) << std::setw(8) << o.levi().semisimple_label << std::setw(22)
          << to_string(shift(o).rep()) << qspin_text(o) << "\n";
  }
  return out.str();
}

std::string cmd_index(const RunConfig& c) {
  auto b = bundle_of(c.example);
  IntBox box = box_of(c, b);
  std::string format = c.format.empty() ? "json" : c.format;
  check_format(format, {"json", "csv", "table"});
  FormalCharacter g = global_index(b.torus_model, generic_polarization(b.torus_model));
  if (format == "csv") return window_csv(g, box);

  std::optional<CharacterK> k;
  if (b.slice) k = induced_character(*b.slice);
  if (format == "table") {
    std::ostringstream out;
    out << "example " << b.descriptor.to_string() << "\n";
    if (k) out << "Q_K = " << to_string(*k) << "\n";
    auto values = window(g, box);
    auto pts = box.points();
    out << "Q_T on " << c.box << "\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (values[i] != 0) out << "  " << to_string(WeightVector::from_ints(pts[i])) << "  " << values[i] << "\n";
    return out.str();
  }

  nlohmann::json j;
  j["example"] = b.descriptor.to_string();
  j["group"] = b.group.name();
  j["box"] = {{"lo", box.lo}, {"hi", box.hi}};
  nlohmann::json tw = nlohmann::json::array();
  auto values = window(g, box);
  auto pts = box.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (values[i] != 0) tw.push_back({{"mu", pts[i]}, {"mult", values[i]}});
  j["torus_index"] = tw;
  if (k) {
    j["character"] = to_json_value(*k);
    j["coefficient_at_rho"] = k->at(rho(b.group));
  }
  return j.dump(2) + "\n";
}

std::string cmd_qr(const RunConfig& c, bool& ok) {
  auto b = bundle_of(c.example);
  IntBox box = box_of(c, b);
  std::string format = c.format.empty() ? "csv" : c.format;
  check_format(format, {"csv", "table"});
  ProfileOptions opts;
  opts.fibers = b.torus_fibers;
  opts.in_relint = b.torus_relint;
  QRReport r = verify_qr_abelian(b.torus_model, box, opts);
  ok = r.summary;
  if (!ok) std::cerr << "spincq: [Q,R]=0 mismatch for " << b.descriptor.to_string() << "\n";
  return format == "csv" ? r.to_csv() : r.to_table();
}

std::string cmd_dh(const RunConfig& c) {
  auto b = bundle_of(c.example);
  std::string format = c.format.empty() ? "pgm" : c.format;
  check_format(format, {"pgm", "svg"});
  RasterGrid grid;
  try {
    grid = RasterGrid::parse(c.grid);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  DhRaster r = dh_raster(b.torus_model, grid);
  return format == "pgm" ? to_pgm(r) : to_svg(r, grid);
}

std::string cmd_moment(const RunConfig& c) {
  auto b = bundle_of(c.example);
  std::string format = c.format.empty() ? "json" : c.format;
  check_format(format, {"json", "table"});
  KirwanSet k = kirwan_image(b.descriptor);
  return format == "json" ? k.to_json().dump(2) + "\n" : k.to_string() + "\n";
}

std::string cmd_decompose(const RunConfig& c) {
  auto b = bundle_of(c.example);
  IntBox box = box_of(c, b);
  std::string format = c.format.empty() ? "csv" : c.format;
  check_format(format, {"csv"});
  return decomposition_csv(witten_decomposition(b.torus_model), box);
}

// Samples (λ, μ) with λ regular admissible and μ admissible in the radius box.
std::string cmd_magic(const RunConfig& c, bool& ok) {
  RootDatum g = group_of(c.group);
  if (c.radius < 1 || c.radius > 20) throw ConfigError("--radius must lie in [1, 20]");
  auto orbits = admissible_orbits_in_box(g, RationalBox::cube(g.rank(), Rational(static_cast<long>(c.radius))));
  std::vector<WeightVector> lambdas, mus;
  for (const auto& o : orbits) {
    mus.push_back(o.rep());
    if (o.is_regular()) lambdas.push_back(o.rep());
  }
  if (lambdas.empty()) throw ConfigError("no regular admissible orbit in the box");
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::size_t> pick_l(0, lambdas.size() - 1), pick_m(0, mus.size() - 1);
  std::size_t equalities = 0, failures = 0;
  std::ostringstream bad;
  for (std::size_t i = 0; i < c.pairs; ++i) {
    const auto& l = lambdas[pick_l(rng)];
    const auto& m = mus[pick_m(rng)];
    MagicalReport r = magical_check(l, m, g);
    if (r.equality) ++equalities;
    if (!r.holds || !r.conclusions_verified) {
      ++failures;
      bad << "counterexample lambda=" << to_string(l) << " mu=" << to_string(m) << "\n";
    }
  }
  ok = failures == 0;
  std::ostringstream out;
  out << "group " << g.name() << " pairs " << c.pairs << " seed " << c.seed << " equalities " << equalities
      << " counterexamples " << failures << "\n"
      << bad.str();
  return out.str();
}

// Turns a JSON config object into argv words; flags given on the command line come later and win.
std::vector<std::string> config_words(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("subcommand") || !j["subcommand"].is_string())
    throw ConfigError("config file must be an object with a string \"subcommand\"");
  std::vector<std::string> words{j["subcommand"].get<std::string>()};
  for (const auto& [key, value] : j.items()) {
    if (key == "subcommand") continue;
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    words.push_back(flag);
    words.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  return words;
}

int run(int argc, char** argv) {
  std::vector<std::string> words;
  std::string config_path;
  for (int i = 1; i < argc; ++i) {
    std::string w = argv[i];
    if (w == "--config") {
      if (i + 1 >= argc) throw ConfigError("--config needs a path");
      config_path = argv[++i];
    } else if (w.rfind("--config=", 0) == 0) {
      config_path = w.substr(9);
    } else {
      words.push_back(w);
    }
  }
  if (!config_path.empty()) {
    auto from_file = config_words(config_path);
    // The subcommand from the file leads unless the command line names one.
    if (!words.empty() && words.front().rfind("-", 0) != 0 && words.front() != from_file.front())
      throw ConfigError("subcommand on the command line differs from the config file");
    if (!words.empty() && words.front() == from_file.front()) words.erase(words.begin());
    from_file.insert(from_file.end(), words.begin(), words.end());
    words = from_file;
  }

  RunConfig c;
  CLI::App app{"Spin^c quantization of Hamiltonian actions: orbit calculus, indices and [Q,R]=0 checks"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  auto common = [&](CLI::App* s, bool with_box) {
    s->add_option("--format", c.format, "Output format");
    s->add_option("--output,-o", c.output, "Write to this file instead of stdout");
    if (with_box) s->add_option("--box", c.box, "Integer box, e.g. -10:10 or -6:3,-6:3");
  };
  auto* orbits = app.add_subcommand("orbits", "Admissible orbits, shifts and quantizations (table|csv|json|dot)");
  orbits->add_option("--group", c.group, "su2, u2, su3 or torus:r");
  orbits->add_option("--ancestors-of", c.ancestors_of, "List ancestors of this regular admissible orbit (or rho)");
  orbits->add_option("--levi", c.levi, "Restrict ancestors to a Levi class: 0, su(2), su(3)");
  common(orbits, false);
  orbits->add_option("--box", c.box, "Radius of the coordinate box");
  auto* index = app.add_subcommand("index", "Equivariant index of an example (json|csv|table)");
  auto* qr = app.add_subcommand("qr", "Check m(mu) = Q(M_mu) on a box (csv|table); exit 1 on mismatch");
  auto* dh = app.add_subcommand("dh", "Duistermaat-Heckman density raster (pgm|svg)");
  auto* moment = app.add_subcommand("moment", "Kirwan set of an example (json|table)");
  auto* decompose = app.add_subcommand("decompose", "Witten decomposition of the torus index (csv)");
  for (auto* s : {index, qr, dh, moment, decompose}) {
    s->add_option("--example", c.example, "p1:n, p1_deformed:n,f, product_p1, hirzebruch:n1,n2, su3_flag:a,b");
    common(s, s != dh && s != moment);
  }
  dh->add_option("--grid", c.grid, "lo:hi:step on both axes");
  auto* magic = app.add_subcommand("magic", "Sample the magical inequality");
  magic->add_option("--group", c.group, "su2, u2, su3 or torus:r");
  magic->add_option("--seed", c.seed, "Sampling seed");
  magic->add_option("--pairs", c.pairs, "Number of sampled pairs");
  magic->add_option("--radius", c.radius, "Coordinate radius of the sampling box");
  common(magic, false);

  std::vector<std::string> reversed(words.rbegin(), words.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  bool ok = true;
  std::string text;
  if (orbits->parsed()) text = cmd_orbits(c);
  else if (index->parsed()) text = cmd_index(c);
  else if (qr->parsed()) text = cmd_qr(c, ok);
  else if (dh->parsed()) text = cmd_dh(c);
  else if (moment->parsed()) text = cmd_moment(c);
  else if (decompose->parsed()) text = cmd_decompose(c);
  else if (magic->parsed()) text = cmd_magic(c, ok);

  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + c.output);
    out << text;
  }
  return ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "spincq: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "spincq: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "spincq: " << e.what() << "\n";
    return kExitMath;
  }
}
