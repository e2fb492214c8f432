#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "zigzag/complex.hpp"
#include "zigzag/coxeter.hpp"
#include "zigzag/error.hpp"
#include "zigzag/geodesic.hpp"
#include "zigzag/polytope.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag::cli {
namespace {

using json = nlohmann::json;

// Work above this many group elements or flags needs --deep.
constexpr std::size_t kDeepThreshold = 10'000;

struct Globals {
  bool json = false;
  bool deep = false;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultElementCap;
};

// What a command hands back: the machine-readable payload, the text rendering
// and the bytes the input digest is computed over.
struct Outcome {
  json result = json::object();
  std::ostringstream text;
  std::string digest_source;
};

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int parse_int(std::string_view what, std::string_view text) {
  int value = 0;
  std::size_t used = 0;
  try {
    value = std::stoi(std::string(text), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw Error(ErrorKind::ParameterOutOfRange, std::string(what) + " expects an integer, got '" + std::string(text) + "'");
  return value;
}

bool is_file(const std::string& path) {
  std::error_code ec;
  return std::filesystem::exists(path, ec) && !std::filesystem::is_directory(path, ec);
}

AbstractPolytope load_polytope(const std::string& source, std::size_t cap) {
  if (is_file(source)) return read_apoly_file(source);
  return polytope_by_name(source, cap);
}

CoxeterMatrix load_matrix(const std::string& source) {
  if (is_file(source)) {
    std::ifstream in(source, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return CoxeterMatrix::parse(buf.str());
  }
  return CoxeterMatrix::named(source);
}

// A complex source is a .cplx path or one of simplex:n, cross:n,
// bipyramid:m, coxeter:NAME, flag:POLYTOPE. The result is always relabelled
// into canonical order so that re-reading an exported file gives the same
// vertex and facet numbering.
Complex load_raw_complex(const std::string& source, std::size_t cap) {
  if (is_file(source)) return read_cplx_file(source);
  const auto colon = source.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::Parse, "no such file or built-in complex: " + source);
  const std::string kind = source.substr(0, colon);
  const std::string arg = source.substr(colon + 1);
  if (kind == "simplex") return simplex(parse_int("simplex:n", arg)).complex();
  if (kind == "cross") return cross_polytope(parse_int("cross:n", arg)).complex();
  if (kind == "bipyramid") return bipyramid(parse_int("bipyramid:m", arg)).complex();
  if (kind == "coxeter") return coxeter_complex(load_matrix(arg), cap).complex();
  if (kind == "flag") return flag_complex(load_polytope(arg, cap)).complex();
  throw Error(ErrorKind::Parse, "unknown complex source kind '" + kind + "'");
}

ThinChamberComplex load_complex(const std::string& source, std::size_t cap, Outcome& out) {
  ThinChamberComplex c = ThinChamberComplex::validate(canonical_form(load_raw_complex(source, cap)));
  out.digest_source = write_cplx(c.complex());
  return c;
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.size() == 1 && tokens[0].find(',') != std::string::npos) {
    std::string one = tokens[0];
    tokens.clear();
    std::istringstream parts(one);
    for (std::string t; std::getline(parts, t, ',');)
      if (!t.empty()) tokens.push_back(t);
  }
  return tokens;
}

Face face_from_tokens(const ThinChamberComplex& c, const std::string& text) {
  const auto tokens = split_tokens(text);
  auto face = c.complex().face_from_labels(tokens);
  if (!face || face->empty() || !c.is_face(*face))
    throw Error(ErrorKind::FaceNotInComplex, "{" + text + "} is not a face");
  return *face;
}

json labels_of(const ThinChamberComplex& c, std::span<const VertexId> vs) {
  json a = json::array();
  for (VertexId v : vs) a.push_back(c.complex().label(v));
  return a;
}

std::string joined(const json& labels, const char* sep = " ") {
  std::string s;
  for (const auto& l : labels) {
    if (!s.empty()) s += sep;
    s += l.is_string() ? l.get<std::string>() : l.dump();
  }
  return s;
}

std::string braces(const json& labels) { return "{" + joined(labels, ",") + "}"; }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// ---------------------------------------------------------------- validate

void cmd_validate(const std::string& source, const Globals& g, Outcome& out) {
  Complex raw = canonical_form(load_raw_complex(source, g.cap));
  out.digest_source = write_cplx(raw);
  json& r = out.result;
  r["rank"] = raw.rank();
  r["vertices"] = raw.num_vertices();
  r["facets"] = raw.num_facets();
  r["pure"] = true;
  out.text << "rank: " << raw.rank() << "\nvertices: " << raw.num_vertices() << "\nfacets: " << raw.num_facets()
           << "\npure: yes\n";
  try {
    const ThinChamberComplex c = ThinChamberComplex::validate(std::move(raw));
    r["ridges"] = c.num_ridges();
    r["thin"] = true;
    r["chamber"] = true;
    out.text << "ridges: " << c.num_ridges() << "\nthin: yes\nchamber: yes\n";
  } catch (const Error& e) {
    r["thin"] = e.kind() != ErrorKind::NotThin;
    r["chamber"] = false;
    out.text << "thin: " << (e.kind() == ErrorKind::NotThin ? "no" : "yes") << "\nchamber: no\n";
    throw;
  }
}

// ----------------------------------------------------------------- zigzags

void cmd_zigzags(const std::string& source, std::optional<int> shadow_level, const Globals& g, Outcome& out) {
  const ThinChamberComplex c = load_complex(source, g.cap, out);
  const int n = c.rank();
  if (shadow_level && (*shadow_level < 0 || *shadow_level >= n))
    throw Error(ErrorKind::LevelOutOfRange, "--shadow " + std::to_string(*shadow_level) + " outside 0.." +
                                                std::to_string(n - 1));
  const auto inventory = enumerate_zigzags(c);
  const ZigzagPredicates p = zigzag_predicates(c, inventory);

  std::set<std::size_t> length_set;
  std::uint64_t covered = 0;
  json list = json::array();
  for (const Zigzag& z : inventory) {
    length_set.insert(z.length());
    covered += static_cast<std::uint64_t>(orbits_per_zigzag(n)) * z.length();
    json item;
    item["length"] = z.length();
    item["simple"] = z.simple();
    item["zero_shadow"] = labels_of(c, z.zero_shadow());
    if (shadow_level) {
      json faces = json::array();
      for (const Face& f : shadow(z, *shadow_level).faces) faces.push_back(labels_of(c, f));
      item["shadow"] = faces;
    }
    list.push_back(std::move(item));
  }

  json& r = out.result;
  r["rank"] = n;
  r["vertices"] = c.num_vertices();
  r["facets"] = c.num_facets();
  r["flags"] = p.flags;
  r["count"] = p.count;
  r["lengths"] = std::vector<std::size_t>(length_set.begin(), length_set.end());
  r["z_simple"] = p.z_simple;
  r["z_uniform"] = p.z_uniform;
  r["conservation"] = {{"covered", covered}, {"flags", p.flags}, {"holds", covered == p.flags}};
  if (p.z_uniform) {
    const std::uint64_t expected = p.flags / (orbits_per_zigzag(n) * *p.common_length);
    r["count_formula"] = {{"expected", expected}, {"holds", p.count_formula_holds}};
  } else {
    r["count_formula"] = nullptr;
  }
  if (shadow_level) r["shadow_level"] = *shadow_level;
  r["zigzags"] = list;

  auto& t = out.text;
  t << "rank " << n << ", " << c.num_vertices() << " vertices, " << c.num_facets() << " facets, " << p.flags
    << " flags\n";
  t << "zigzags: " << p.count << "\nlengths:";
  for (auto l : length_set) t << ' ' << l;
  t << "\nz-simple: " << (p.z_simple ? "yes" : "no") << "\nz-uniform: " << (p.z_uniform ? "yes" : "no") << '\n';
  if (p.z_uniform)
    t << "count formula n!N/2l = " << r["count_formula"]["expected"] << ": "
      << (p.count_formula_holds ? "holds" : "FAILS") << '\n';
  t << "conservation: zigzags cover " << covered << " of " << p.flags << " flags: "
    << (covered == p.flags ? "holds" : "FAILS") << '\n';
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& z = list[i];
    t << "Z" << i + 1 << " length " << z["length"] << (z["simple"].get<bool>() ? " simple" : "") << ": "
      << joined(z["zero_shadow"]) << '\n';
    if (shadow_level) {
      t << "   " << *shadow_level << "-shadow:";
      for (const auto& f : z["shadow"]) t << ' ' << braces(f);
      t << '\n';
    }
  }

  if (covered != p.flags)
    throw Error(ErrorKind::VerificationFailure, "zigzag orbits cover " + std::to_string(covered) + " of " +
                                                    std::to_string(p.flags) + " flags");
  if (p.z_uniform && !p.count_formula_holds)
    throw Error(ErrorKind::VerificationFailure, "uniform complex violates the zigzag count formula");
}

// ---------------------------------------------------------------- zconnect

void cmd_zconnect(const std::string& source, int k, const std::string& x, const std::string& y, const Globals& g,
                  Outcome& out) {
  const ThinChamberComplex c = load_complex(source, g.cap, out);
  const int n = c.rank();
  if (k < 0 || k >= n)
    throw Error(ErrorKind::LevelOutOfRange, "--rank " + std::to_string(k) + " outside 0.." + std::to_string(n - 1));
  const auto inventory = enumerate_zigzags(c);
  json& r = out.result;
  r["rank"] = k;
  auto& t = out.text;

  if (!x.empty() || !y.empty()) {
    if (x.empty() || y.empty()) throw Error(ErrorKind::ParameterOutOfRange, "--x and --y go together");
    const Face fx = face_from_tokens(c, x);
    const Face fy = face_from_tokens(c, y);
    if (static_cast<int>(fx.size()) != k + 1 || static_cast<int>(fy.size()) != k + 1)
      throw Error(ErrorKind::RankMismatch, "both faces must have rank " + std::to_string(k));
    const bool zc = are_z_connected(c, inventory, fx, fy);
    r["x"] = labels_of(c, fx);
    r["y"] = labels_of(c, fy);
    r["z_connected"] = zc;
    t << braces(r["x"]) << " and " << braces(r["y"]) << ": " << (zc ? "z-connected" : "not z-connected") << '\n';
    if (k >= 1 && k <= n - 2) {
      const bool weak = weakly_adjacent(c, fx, fy);
      r["weakly_adjacent"] = weak;
      t << "weakly adjacent: " << (weak ? "yes" : "no") << '\n';
    } else {
      r["weakly_adjacent"] = nullptr;
    }
    return;
  }

  const ZConnectivity zc(c, inventory, k);
  json faces = json::array();
  for (const Face& f : zc.faces()) faces.push_back(labels_of(c, f));
  json matrix = json::array();
  for (std::size_t i = 0; i < zc.faces().size(); ++i) {
    std::string row(zc.faces().size(), '0');
    for (std::size_t j = 0; j < zc.faces().size(); ++j)
      if (i == j || zc.connected(i, j)) row[j] = '1';
    matrix.push_back(row);
  }
  r["faces"] = faces;
  r["matrix"] = matrix;
  r["connected_pairs"] = zc.connected_pairs();
  r["all_connected"] = zc.all_connected();
  t << zc.faces().size() << " faces of rank " << k << ", " << zc.connected_pairs() << " z-connected pairs"
    << (zc.all_connected() ? " (all)" : "") << '\n';
  for (std::size_t i = 0; i < faces.size(); ++i) t << matrix[i].get<std::string>() << "  " << braces(faces[i]) << '\n';
}

// ---------------------------------------------------------------- geodesic

void cmd_geodesic(const std::string& source, const std::string& from, const std::string& to, const Globals& g,
                  Outcome& out) {
  const ThinChamberComplex c = load_complex(source, g.cap, out);
  const int n = c.rank();
  const std::size_t x = facet_from_labels(c, split_tokens(from));
  const std::size_t y = facet_from_labels(c, split_tokens(to));
  const NormalityVerdict v = is_distance_normal_pair(c, x, y);

  json& r = out.result;
  r["from"] = labels_of(c, c.facet(x));
  r["to"] = labels_of(c, c.facet(y));
  r["distance"] = v.distance;
  r["common_vertices"] = v.common_vertices;
  r["normal"] = v.pair_normal;
  r["reason"] = v.reason;
  auto& t = out.text;
  t << "d(" << braces(r["from"]) << ", " << braces(r["to"]) << ") = " << v.distance << '\n';
  t << "common vertices: " << v.common_vertices << '\n';
  t << "distance normal: " << (v.pair_normal ? "yes" : "no") << " (" << v.reason << ")\n";
  if (!v.witness) {
    r["witness"] = nullptr;
    r["extensions"] = nullptr;
    return;
  }

  json path = json::array();
  for (std::size_t f : v.witness->facets) path.push_back(labels_of(c, c.facet(f)));
  r["witness"] = path;
  t << "witness:";
  for (const auto& f : path) t << ' ' << braces(f);
  t << '\n';

  const std::size_t m = v.witness->length();
  const std::uint64_t bound = m <= static_cast<std::size_t>(n) ? factorial(n - static_cast<int>(m)) : 1;
  const auto zs = zigzags_through_geodesic(c, *v.witness);
  json list = json::array();
  for (const Zigzag& z : zs) list.push_back(labels_of(c, z.zero_shadow()));
  const bool ok = m <= static_cast<std::size_t>(n) ? zs.size() <= bound : zs.size() == 1;
  r["extensions"] = {{"count", zs.size()}, {"bound", bound}, {"exact", m > static_cast<std::size_t>(n)},
                     {"holds", ok}, {"zigzags", list}};
  t << "extending zigzags: " << zs.size() << (m > static_cast<std::size_t>(n) ? " (must be " : " (at most ") << bound
    << ")\n";
  for (const auto& z : list) t << "  " << joined(z) << '\n';
  if (!ok) throw Error(ErrorKind::VerificationFailure, "extension count out of bounds");
}

// ----------------------------------------------------------------- coxeter

json matrix_json(const CoxeterMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.rank(); ++j) row.push_back(m.m(i, j));
    rows.push_back(row);
  }
  return rows;
}

void cmd_coxeter(const std::string& source, bool verify, std::size_t samples, const Globals& g, Outcome& out) {
  const CoxeterMatrix m = load_matrix(source);
  out.digest_source = m.to_text();
  json& r = out.result;
  auto& t = out.text;
  r["name"] = m.name().empty() ? source : m.name();
  r["rank"] = m.rank();
  r["matrix"] = matrix_json(m);

  GroupTable group = enumerate_group(m, g.cap);
  const std::size_t order = group.size();
  const CoxeterNumber h = coxeter_number(group, g.seed);
  r["order"] = order;
  r["coxeter_number"] = h.h;
  r["orders_checked"] = h.orders_checked;
  t << r["name"].get<std::string>() << ": rank " << m.rank() << ", |W| = " << order << ", h = " << h.h << '\n';

  json cayley;
  cayley["vertices"] = order;
  cayley["edges"] = order * static_cast<std::size_t>(m.rank()) / 2;
  if (m.rank() == 2) {
    // The Cayley graph of a dihedral group is a single cycle alternating s1, s2.
    std::size_t steps = 0;
    Element w = GroupTable::identity();
    do {
      w = group.right(w, static_cast<int>(steps % 2));
      ++steps;
    } while (w != GroupTable::identity() || steps % 2 != 0);
    const bool cycle = steps == order;
    cayley["cycle_length"] = steps;
    cayley["is_cycle"] = cycle;
    t << "Cayley graph: " << (cycle ? "" : "not ") << "a " << steps << "-cycle\n";
  } else {
    t << "Cayley graph: " << order << " vertices, " << cayley["edges"] << " edges\n";
  }
  r["cayley_graph"] = cayley;

  if (verify && order > kDeepThreshold && !g.deep)
    throw Error(ErrorKind::ParameterOutOfRange,
                "--verify on |W| = " + std::to_string(order) + " needs --deep");

  const CoxeterComplex cc = CoxeterComplex::build(std::move(group));
  const ThinChamberComplex& sigma = cc.complex();
  r["complex"] = {{"vertices", sigma.num_vertices()}, {"facets", sigma.num_facets()}, {"ridges", sigma.num_ridges()}};
  t << "Coxeter complex: " << sigma.num_vertices() << " vertices, " << sigma.num_facets() << " facets, "
    << sigma.num_ridges() << " ridges\n";

  if (!verify) {
    r["verify"] = nullptr;
    return;
  }
  cc.group().verify();
  const Prop35Report rep = verify_prop_3_5(cc, samples, g.seed);
  r["verify"] = {{"zigzag_count", rep.zigzag_count},   {"expected_count", rep.expected_count},
                 {"zigzag_length", rep.zigzag_length}, {"expected_length", rep.expected_length},
                 {"z_simple", rep.z_simple},           {"z_uniform", rep.z_uniform},
                 {"shadows_checked", rep.shadows_checked}, {"powers_checked", rep.powers_checked},
                 {"verdict", "PASS"}};
  t << rep.zigzag_count << " zigzags x length " << rep.zigzag_length << " (expected " << rep.expected_count
    << " x " << rep.expected_length << "), z-simple, " << rep.shadows_checked << " shadows checked\n";
  t << "PASS\n";
}

// ---------------------------------------------------------------- polytope

std::string delta_text(std::span<const int> delta) {
  std::string s;
  for (int d : delta) s += std::to_string(d);
  return s;
}

void cmd_polytope(const std::string& source, bool check, const Globals& g, Outcome& out) {
  const AbstractPolytope p = load_polytope(source, g.cap);
  out.digest_source = write_apoly(p);
  const int n = p.rank();
  json& r = out.result;
  auto& t = out.text;
  r["name"] = source;
  r["rank"] = n;
  json faces = json::array();
  for (int k = 0; k < n; ++k) faces.push_back(p.face_count(k));
  r["faces"] = faces;
  r["flags"] = p.flag_count();
  t << source << ": rank " << n << ", faces " << joined(faces, "/") << ", " << p.flag_count() << " flags\n";

  // Every permutation for rank <= 4, a seeded sample beyond.
  std::vector<std::vector<int>> deltas;
  std::vector<int> delta(static_cast<std::size_t>(n));
  std::iota(delta.begin(), delta.end(), 0);
  if (factorial(n) <= 24) {
    do deltas.push_back(delta);
    while (std::next_permutation(delta.begin(), delta.end()));
  } else {
    std::mt19937_64 rng(g.seed);
    deltas.push_back(delta);
    for (int i = 1; i < 24; ++i) {
      std::shuffle(delta.begin(), delta.end(), rng);
      deltas.push_back(delta);
    }
  }
  json per_delta = json::array();
  std::set<std::size_t> all_lengths;
  for (const auto& d : deltas) {
    std::set<std::size_t> ls;
    const auto orbits = delta_zigzags(p, d);
    for (const auto& z : orbits) ls.insert(z.length());
    all_lengths.insert(ls.begin(), ls.end());
    per_delta.push_back({{"delta", d}, {"orbits", orbits.size()},
                         {"lengths", std::vector<std::size_t>(ls.begin(), ls.end())}});
    t << "delta " << delta_text(d) << ": " << orbits.size() << " orbits, length";
    for (auto l : ls) t << ' ' << l;
    t << '\n';
  }
  r["deltas"] = per_delta;
  r["lengths"] = std::vector<std::size_t>(all_lengths.begin(), all_lengths.end());
  r["delta_independent"] = all_lengths.size() == 1;
  t << "length independent of delta: " << (all_lengths.size() == 1 ? "yes" : "no") << '\n';

  if (!check) {
    r["prop_3_6"] = nullptr;
    return;
  }
  if (p.flag_count() > kDeepThreshold && !g.deep)
    throw Error(ErrorKind::ParameterOutOfRange,
                "--check-prop-3-6 on " + std::to_string(p.flag_count()) + " flags needs --deep");
  const Prop36Report rep = prop_3_6_check(p);
  json j;
  j["delta_orbits"] = rep.delta_orbits;
  j["generalized_zigzags"] = rep.generalized_zigzags;
  j["flag_complex_zigzags"] = rep.flag_complex_zigzags;
  j["lengths"] = rep.lengths;
  j["flag_complex_lengths"] = rep.flag_complex_lengths;
  j["expected_count"] = rep.expected_count ? json(*rep.expected_count) : json(nullptr);
  j["simplicity_preserved"] = rep.simplicity_preserved;
  j["verdict"] = "PASS";
  r["prop_3_6"] = j;
  t << "flag complex: " << rep.flag_complex_zigzags << " zigzags, length " << joined(json(rep.flag_complex_lengths))
    << "; " << rep.generalized_zigzags << " generalized zigzags";
  if (rep.expected_count) t << " (expected " << *rep.expected_count << ")";
  t << "\nPASS\n";
}

// -------------------------------------------------------------------- make

void cmd_make(const std::string& source, const std::string& output, const std::string& format, const Globals& g,
              Outcome& out) {
  std::string text;
  if (format == "cplx") {
    const ThinChamberComplex c = load_complex(source, g.cap, out);
    text = write_cplx(c.complex());
  } else {
    // A polytope name first, then any complex source via its face poset.
    std::optional<AbstractPolytope> p;
    try {
      p = load_polytope(source, g.cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotStringDiagram) throw;
    }
    if (!p) {
      Outcome scratch;
      p = polytope_from_complex(load_complex(source, g.cap, scratch));
    }
    text = write_apoly(*p);
    out.digest_source = text;
  }
  json& r = out.result;
  r["format"] = format;
  r["bytes"] = text.size();
  r["digest"] = fnv1a_hex(text);
  if (output.empty() || output == "-") {
    r["path"] = nullptr;
    r["content"] = text;
    out.text << text;
    if (!text.empty() && text.back() != '\n') out.text << '\n';
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw Error(ErrorKind::Parse, "cannot write " + output);
  f << text;
  if (!f) throw Error(ErrorKind::Parse, "write to " + output + " failed");
  r["path"] = output;
  out.text << "wrote " << text.size() << " bytes to " << output << '\n';
}

void add_globals(CLI::App& app, Globals& g) {
  app.add_flag("--json", g.json, "Emit a key-sorted JSON report");
  app.add_flag("--deep", g.deep, "Allow long-running verification");
  app.add_option("--seed", g.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--cap", g.cap, "Largest group enumerated")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Zigzags of thin chamber complexes, Coxeter complexes and abstract polytopes", "zigzag"};
  app.require_subcommand(1);
  add_globals(app, g);

  std::string source, output, format = "cplx", from, to, x, y;
  std::optional<int> shadow_level;
  int zrank = 0;
  bool verify = false, check36 = false;
  std::size_t samples = 64;

  auto* validate = app.add_subcommand("validate", "Check that a complex is pure, thin and a chamber complex");
  validate->add_option("source", source, "File or built-in complex")->required();

  auto* zz = app.add_subcommand("zigzags", "List zigzags and check the counting identities");
  zz->add_option("source", source, "File or built-in complex")->required();
  zz->add_option("--shadow", shadow_level, "Also print the k-shadows");

  auto* zc = app.add_subcommand("zconnect", "z-connectedness of faces of one rank");
  zc->add_option("source", source, "File or built-in complex")->required();
  zc->add_option("--rank", zrank, "Face rank k")->required();
  zc->add_option("--x", x, "First face, as vertex labels");
  zc->add_option("--y", y, "Second face, as vertex labels");

  auto* geo = app.add_subcommand("geodesic", "Distance normality and zigzags through a geodesic");
  geo->add_option("source", source, "File or built-in complex")->required();
  geo->add_option("--from", from, "First facet, as vertex labels")->required();
  geo->add_option("--to", to, "Second facet, as vertex labels")->required();

  auto* cox = app.add_subcommand("coxeter", "Coxeter group, its Coxeter number and Coxeter complex");
  cox->add_option("source", source, "Type name such as H3 or I2(7), or a .cox file")->required();
  cox->add_flag("--verify", verify, "Check the zigzag structure of the Coxeter complex");
  cox->add_option("--samples", samples, "Sampled flags for the shadow formulas")->capture_default_str();

  auto* poly = app.add_subcommand("polytope", "Generalized zigzags of an abstract polytope");
  poly->add_option("source", source, "Built-in name or .apoly file")->required();
  poly->add_flag("--check-prop-3-6", check36, "Check the correspondence with flag-complex zigzags");

  auto* make = app.add_subcommand("make", "Write a built-in complex or polytope");
  make->add_option("source", source, "Built-in complex or polytope")->required();
  make->add_option("-o,--output", output, "Output path (default stdout)");
  make->add_option("--format", format, "cplx or apoly")->check(CLI::IsMember({"cplx", "apoly"}))->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  Outcome outcome;
  json error = nullptr;
  int exit_code = kExitOk;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (command == "validate") cmd_validate(source, g, outcome);
    else if (command == "zigzags") cmd_zigzags(source, shadow_level, g, outcome);
    else if (command == "zconnect") cmd_zconnect(source, zrank, x, y, g, outcome);
    else if (command == "geodesic") cmd_geodesic(source, from, to, g, outcome);
    else if (command == "coxeter") cmd_coxeter(source, verify, samples, g, outcome);
    else if (command == "polytope") cmd_polytope(source, check36, g, outcome);
    else if (command == "make") cmd_make(source, output, format, g, outcome);
  } catch (const Error& e) {
    exit_code = e.is_verification() ? kExitVerification : kExitInvalid;
    error = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  } catch (const std::exception& e) {
    exit_code = kExitInvalid;
    error = {{"kind", "Internal"}, {"message", e.what()}};
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (g.json) {
    json report;
    report["command"] = command;
    report["args"] = args;
    report["input_digest"] = outcome.digest_source.empty() ? json(nullptr) : json(fnv1a_hex(outcome.digest_source));
    report["result"] = outcome.result;
    report["status"] = exit_code == kExitOk ? "ok" : exit_code == kExitVerification ? "verification_failed" : "invalid";
    report["error"] = error;
    report["timing_ms"] = std::round(ms * 1000.0) / 1000.0;
    out << report.dump(2) << '\n';
  } else {
    out << outcome.text.str();
    if (!error.is_null()) err << "error: " << error["message"].get<std::string>() << '\n';
  }
  return exit_code;
}

}  // namespace zigzag::cli
