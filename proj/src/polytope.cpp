#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "zigzag/error.hpp"
#include "zigzag/polytope.hpp"

namespace zigzag {

namespace {

struct ChainHash {
  std::size_t operator()(const std::vector<FaceId>& c) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (FaceId v : c) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

template <class T>
std::size_t least_rotation_of(std::span<const T> s) {
  // Two-candidate scan for the lexicographically least rotation.
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const T a = s[(i + k) % n], b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) i += k + 1;
    else j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

template <class T>
std::vector<T> rotated(std::span<const T> s, std::size_t start) {
  std::vector<T> out;
  out.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out.push_back(s[(start + k) % s.size()]);
  return out;
}

GeneralizedZigzag canonical_zigzag(std::vector<int> delta, std::vector<FlagId> orbit) {
  std::vector<FlagId> back(orbit.size());
  for (std::size_t k = 0; k < orbit.size(); ++k) back[k] = orbit[(orbit.size() - k) % orbit.size()];
  std::vector<int> delta_rev(delta.rbegin(), delta.rend());
  GeneralizedZigzag a{std::move(delta), rotated<FlagId>(orbit, least_rotation_of<FlagId>(orbit))};
  GeneralizedZigzag b{std::move(delta_rev), rotated<FlagId>(back, least_rotation_of<FlagId>(back))};
  if (std::tie(b.flags, b.delta) < std::tie(a.flags, a.delta)) return b;
  return a;
}

void check_delta(int n, std::span<const int> delta) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  bool ok = static_cast<int>(delta.size()) == n;
  for (int d : delta) {
    if (!ok) break;
    if (d < 0 || d >= n || seen[static_cast<std::size_t>(d)]) ok = false;
    else seen[static_cast<std::size_t>(d)] = true;
  }
  if (!ok) throw Error(ErrorKind::ParameterOutOfRange, "delta is not a permutation of 0.." + std::to_string(n - 1));
}

std::vector<std::size_t> vertex_offsets(const AbstractPolytope& p) {
  std::vector<std::size_t> offset(static_cast<std::size_t>(p.rank()) + 1, 0);
  for (int k = 0; k < p.rank(); ++k)
    offset[static_cast<std::size_t>(k) + 1] = offset[static_cast<std::size_t>(k)] + p.face_count(k);
  return offset;
}

std::string chain_text(const AbstractPolytope& p, const PolytopeFlag& f) {
  std::string s = "(";
  for (std::size_t k = 0; k < f.chain.size(); ++k) {
    if (k) s += ", ";
    s += p.face_name(static_cast<int>(k), f.chain[k]);
  }
  return s + ")";
}

}  // namespace

AbstractPolytope AbstractPolytope::build(int rank, std::vector<std::vector<std::string>> names,
                                         std::vector<Incidence> incidences) {
  if (rank < 1) throw Error(ErrorKind::RankOutOfRange, "polytope rank must be at least 1, got " + std::to_string(rank));
  if (names.size() != static_cast<std::size_t>(rank) + 2)
    throw Error(ErrorKind::RankMismatch, "rank " + std::to_string(rank) + " needs " + std::to_string(rank + 2) +
                                             " face lists, got " + std::to_string(names.size()));
  AbstractPolytope p;
  p.rank_ = rank;
  p.names_ = std::move(names);
  const auto slots = p.names_.size();
  p.up_.resize(slots);
  p.down_.resize(slots);
  for (std::size_t r = 0; r < slots; ++r) {
    p.up_[r].resize(p.names_[r].size());
    p.down_[r].resize(p.names_[r].size());
  }
  std::sort(incidences.begin(), incidences.end());
  for (std::size_t i = 0; i < incidences.size(); ++i) {
    const auto& e = incidences[i];
    if (e.rank < -1 || e.rank >= rank)
      throw Error(ErrorKind::InvalidPolytope, "incidence rank " + std::to_string(e.rank) + " out of range");
    const auto lo = static_cast<std::size_t>(e.rank + 1);
    if (e.low >= p.names_[lo].size() || e.high >= p.names_[lo + 1].size())
      throw Error(ErrorKind::InvalidPolytope, "incidence [" + std::to_string(e.rank) + ", " + std::to_string(e.low) +
                                                  ", " + std::to_string(e.high) + "] names a missing face");
    if (i > 0 && incidences[i - 1] == e)
      throw Error(ErrorKind::InvalidPolytope, "duplicate incidence [" + std::to_string(e.rank) + ", " +
                                                  std::to_string(e.low) + ", " + std::to_string(e.high) + "]");
    p.up_[lo][e.low].push_back(e.high);
    p.down_[lo + 1][e.high].push_back(e.low);
  }
  for (auto& rank_lists : p.down_)
    for (auto& l : rank_lists) std::sort(l.begin(), l.end());
  p.validate_and_index();
  return p;
}

void AbstractPolytope::validate_and_index() {
  const int n = rank_;
  const auto bad = [](const std::string& msg) { return Error(ErrorKind::InvalidPolytope, msg); };
  if (face_count(-1) != 1) throw bad("there must be exactly one face of rank -1");
  if (face_count(n) != 1) throw bad("there must be exactly one face of rank " + std::to_string(n));
  for (int k = -1; k <= n; ++k) {
    if (face_count(k) == 0) throw bad("no faces of rank " + std::to_string(k));
    for (FaceId f = 0; f < face_count(k); ++f) {
      if (k > -1 && down(k, f).empty())
        throw bad("face " + face_name(k, f) + " of rank " + std::to_string(k) + " has no face below it");
      if (k < n && up(k, f).empty())
        throw bad("face " + face_name(k, f) + " of rank " + std::to_string(k) + " has no face above it");
    }
  }

  // (P1): every incident pair two ranks apart has exactly two faces between.
  for (int k = 0; k < n; ++k) {
    std::vector<int> between(face_count(k + 1), 0);
    std::vector<FaceId> touched;
    for (FaceId a = 0; a < face_count(k - 1); ++a) {
      touched.clear();
      for (FaceId b : up(k - 1, a))
        for (FaceId c : up(k, b)) {
          if (between[c]++ == 0) touched.push_back(c);
        }
      for (FaceId c : touched) {
        if (between[c] != 2)
          throw bad("diamond property fails between face " + face_name(k - 1, a) + " of rank " +
                    std::to_string(k - 1) + " and face " + face_name(k + 1, c) + " of rank " + std::to_string(k + 1) +
                    ": " + std::to_string(between[c]) + " faces of rank " + std::to_string(k) + " in between");
        between[c] = 0;
      }
    }
  }

  // Flag count before enumerating.
  {
    std::vector<double> chains(face_count(0), 1.0);
    for (int k = 1; k < n; ++k) {
      std::vector<double> next(face_count(k), 0.0);
      for (FaceId f = 0; f < face_count(k); ++f)
        for (FaceId g : down(k, f)) next[f] += chains[g];
      chains = std::move(next);
    }
    const double total = std::accumulate(chains.begin(), chains.end(), 0.0);
    if (total > static_cast<double>(kMaxPolytopeFlags))
      throw Error(ErrorKind::TooManyFlags, "polytope has about " + std::to_string(static_cast<long double>(total)) +
                                               " flags, limit " + std::to_string(kMaxPolytopeFlags));
  }

  flags_.clear();
  {
    std::vector<FaceId> chain;
    const auto extend = [&](auto&& self, int k) -> void {
      if (k == n) {
        flags_.push_back(PolytopeFlag{chain});
        return;
      }
      const auto options = k == 0 ? up(-1, 0) : up(k - 1, chain.back());
      for (FaceId f : options) {
        chain.push_back(f);
        self(self, k + 1);
        chain.pop_back();
      }
    };
    extend(extend, 0);
  }
  std::unordered_map<std::vector<FaceId>, FlagId, ChainHash> index;
  index.reserve(flags_.size());
  for (FlagId i = 0; i < flags_.size(); ++i) index.emplace(flags_[i].chain, i);

  sigma_.assign(static_cast<std::size_t>(n), std::vector<kernels::Index>(flags_.size()));
  for (FlagId id = 0; id < flags_.size(); ++id) {
    const auto& chain = flags_[id].chain;
    for (int i = 0; i < n; ++i) {
      const FaceId lower = i == 0 ? 0 : chain[static_cast<std::size_t>(i) - 1];
      const FaceId upper = i == n - 1 ? 0 : chain[static_cast<std::size_t>(i) + 1];
      const auto above = up(i - 1, lower);
      const auto below = down(i + 1, upper);
      FaceId other = chain[static_cast<std::size_t>(i)];
      for (FaceId c : above)
        if (c != chain[static_cast<std::size_t>(i)] && std::binary_search(below.begin(), below.end(), c)) other = c;
      auto swapped = chain;
      swapped[static_cast<std::size_t>(i)] = other;
      sigma_[static_cast<std::size_t>(i)][id] = index.at(swapped);
    }
  }

  // (P2): the flags of every section of rank difference >= 3 are connected
  // under single-face changes.
  std::vector<std::vector<std::uint32_t>> below_stamp(static_cast<std::size_t>(n) + 2);
  std::vector<std::vector<std::uint32_t>> above_stamp(static_cast<std::size_t>(n) + 2);
  for (int k = -1; k <= n; ++k) {
    below_stamp[static_cast<std::size_t>(k + 1)].assign(face_count(k), 0);
    above_stamp[static_cast<std::size_t>(k + 1)].assign(face_count(k), 0);
  }
  std::uint32_t stamp = 0;
  std::vector<std::vector<FaceId>> frontier(static_cast<std::size_t>(n) + 2);
  for (int r = -1; r + 3 <= n; ++r)
    for (FaceId lo = 0; lo < face_count(r); ++lo) {
      // Faces above lo, rank by rank.
      ++stamp;
      frontier[static_cast<std::size_t>(r + 1)].assign(1, lo);
      for (int k = r + 1; k <= n; ++k) {
        auto& next = frontier[static_cast<std::size_t>(k + 1)];
        next.clear();
        for (FaceId f : frontier[static_cast<std::size_t>(k)])
          for (FaceId g : up(k - 1, f))
            if (above_stamp[static_cast<std::size_t>(k + 1)][g] != stamp) {
              above_stamp[static_cast<std::size_t>(k + 1)][g] = stamp;
              next.push_back(g);
            }
      }
      for (int s = r + 3; s <= n; ++s)
        for (FaceId hi : frontier[static_cast<std::size_t>(s + 1)]) {
          const std::uint32_t section_stamp = ++stamp;
          std::vector<FaceId> layer{hi}, next;
          for (int k = s - 1; k > r; --k) {
            next.clear();
            for (FaceId f : layer)
              for (FaceId g : down(k + 1, f))
                if (below_stamp[static_cast<std::size_t>(k + 1)][g] != section_stamp) {
                  below_stamp[static_cast<std::size_t>(k + 1)][g] = section_stamp;
                  next.push_back(g);
                }
            layer.swap(next);
          }
          std::vector<std::vector<FaceId>> chains;
          std::vector<FaceId> chain;
          const auto walk = [&](auto&& self, int k, FaceId from) -> void {
            if (k == s) {
              chains.push_back(chain);
              return;
            }
            for (FaceId g : up(k - 1, from)) {
              if (below_stamp[static_cast<std::size_t>(k + 1)][g] != section_stamp) continue;
              chain.push_back(g);
              self(self, k + 1, g);
              chain.pop_back();
            }
          };
          walk(walk, r + 1, lo);
          UnionFind uf(chains.size());
          std::size_t components = chains.size();
          const std::size_t width = static_cast<std::size_t>(s - r - 1);
          std::unordered_map<std::vector<FaceId>, std::size_t, ChainHash> seen;
          for (std::size_t pos = 0; pos < width; ++pos) {
            seen.clear();
            for (std::size_t c = 0; c < chains.size(); ++c) {
              auto key = chains[c];
              key[pos] = static_cast<FaceId>(-1);
              auto [it, fresh] = seen.emplace(std::move(key), c);
              if (!fresh && uf.unite(it->second, c)) --components;
            }
          }
          if (components != 1)
            throw bad("section between face " + face_name(r, lo) + " of rank " + std::to_string(r) + " and face " +
                      face_name(s, hi) + " of rank " + std::to_string(s) + " is not flag-connected (" +
                      std::to_string(components) + " components)");
        }
    }
}

bool AbstractPolytope::incident(int ka, FaceId a, int kb, FaceId b) const {
  if (ka > kb) return false;
  if (ka == kb) return a == b;
  std::vector<FaceId> layer{a}, next;
  for (int k = ka; k < kb; ++k) {
    next.clear();
    for (FaceId f : layer)
      for (FaceId g : up(k, f)) next.push_back(g);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer.swap(next);
  }
  return std::binary_search(layer.begin(), layer.end(), b);
}

std::vector<Incidence> AbstractPolytope::incidences() const {
  std::vector<Incidence> out;
  for (int k = -1; k < rank_; ++k)
    for (FaceId f = 0; f < face_count(k); ++f)
      for (FaceId g : up(k, f)) out.push_back({k, f, g});
  return out;
}

std::optional<FlagId> AbstractPolytope::find_flag(const PolytopeFlag& f) const {
  const auto it = std::lower_bound(flags_.begin(), flags_.end(), f);
  if (it == flags_.end() || *it != f) return std::nullopt;
  return static_cast<FlagId>(it - flags_.begin());
}

AbstractPolytope polytope_from_complex(const ThinChamberComplex& complex) {
  const auto& c = complex.complex();
  const int n = c.rank();
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(n) + 2);
  names.front() = {"0"};
  names.back() = {"0"};
  std::vector<std::vector<Face>> faces(static_cast<std::size_t>(n));
  std::vector<FaceMap<FaceId>> index(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    faces[static_cast<std::size_t>(k)] = faces_of_rank(c, k);
    for (const auto& f : faces[static_cast<std::size_t>(k)]) {
      std::string name;
      for (VertexId v : f) name += (name.empty() ? "" : ",") + c.label(v);
      index[static_cast<std::size_t>(k)].emplace(f, static_cast<FaceId>(names[static_cast<std::size_t>(k) + 1].size()));
      names[static_cast<std::size_t>(k) + 1].push_back(std::move(name));
    }
  }
  std::vector<Incidence> inc;
  for (FaceId v = 0; v < faces[0].size(); ++v) inc.push_back({-1, 0, v});
  for (int k = 1; k < n; ++k)
    for (FaceId hi = 0; hi < faces[static_cast<std::size_t>(k)].size(); ++hi) {
      const auto& f = faces[static_cast<std::size_t>(k)][hi];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face sub;
        for (std::size_t j = 0; j < f.size(); ++j)
          if (j != drop) sub.push_back(f[j]);
        inc.push_back({k - 1, index[static_cast<std::size_t>(k) - 1].at(sub), hi});
      }
    }
  for (FaceId f = 0; f < faces[static_cast<std::size_t>(n) - 1].size(); ++f) inc.push_back({n - 1, f, 0});
  return AbstractPolytope::build(n, std::move(names), std::move(inc));
}

ThinChamberComplex flag_complex(const AbstractPolytope& p) {
  const int n = p.rank();
  const auto offset = vertex_offsets(p);
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k)
    for (FaceId f = 0; f < p.face_count(k); ++f) labels.push_back(std::to_string(k + 1) + ":" + p.face_name(k, f));
  std::vector<std::vector<VertexId>> facets;
  facets.reserve(p.flag_count());
  for (const auto& flag : p.flags()) {
    std::vector<VertexId> row;
    for (int k = 0; k < n; ++k)
      row.push_back(static_cast<VertexId>(offset[static_cast<std::size_t>(k)] + flag.chain[static_cast<std::size_t>(k)]));
    facets.push_back(std::move(row));
  }
  return ThinChamberComplex::validate(Complex::from_ids(std::move(labels), facets));
}

PolytopeFlag sigma_p(const AbstractPolytope& p, const PolytopeFlag& flag, int i) {
  if (i < 0 || i >= p.rank())
    throw Error(ErrorKind::RankOutOfRange, "sigma index " + std::to_string(i) + " outside 0.." +
                                               std::to_string(p.rank() - 1));
  const auto id = p.find_flag(flag);
  if (!id) throw Error(ErrorKind::NotAFlag, "chain " + std::string(flag.chain.size() == static_cast<std::size_t>(p.rank())
                                                                       ? chain_text(p, flag)
                                                                       : "of wrong length") +
                                                " is not a flag");
  return p.flag(p.sigma_table(i)[*id]);
}

std::vector<kernels::Index> t_delta_table(const AbstractPolytope& p, std::span<const int> delta) {
  check_delta(p.rank(), delta);
  const auto first = p.sigma_table(delta[0]);
  std::vector<kernels::Index> cur(first.begin(), first.end()), tmp(cur.size());
  for (std::size_t k = 1; k < delta.size(); ++k) {
    kernels::compose(p.sigma_table(delta[k]), cur, tmp);
    cur.swap(tmp);
  }
  return cur;
}

namespace {

std::vector<FlagId> orbit_of(std::span<const kernels::Index> table, FlagId start) {
  std::vector<FlagId> orbit{start};
  for (FlagId f = table[start]; f != start; f = table[f]) orbit.push_back(f);
  return orbit;
}

}  // namespace

GeneralizedZigzag generalized_zigzag(const AbstractPolytope& p, std::span<const int> delta, const PolytopeFlag& flag) {
  const auto table = t_delta_table(p, delta);
  const auto id = p.find_flag(flag);
  if (!id) throw Error(ErrorKind::NotAFlag, "chain is not a flag of the polytope");
  return canonical_zigzag(std::vector<int>(delta.begin(), delta.end()), orbit_of(table, *id));
}

std::vector<GeneralizedZigzag> delta_zigzags(const AbstractPolytope& p, std::span<const int> delta) {
  const auto table = t_delta_table(p, delta);
  std::vector<bool> visited(p.flag_count(), false);
  std::vector<GeneralizedZigzag> out;
  for (FlagId f = 0; f < p.flag_count(); ++f) {
    if (visited[f]) continue;
    auto orbit = orbit_of(table, f);
    for (FlagId g : orbit) visited[g] = true;
    out.push_back(canonical_zigzag(std::vector<int>(delta.begin(), delta.end()), std::move(orbit)));
  }
  return out;
}

std::vector<VertexId> interleaved_shadow(const AbstractPolytope& p, const GeneralizedZigzag& z) {
  const auto offset = vertex_offsets(p);
  std::vector<VertexId> seq;
  seq.reserve(z.flags.size() * z.delta.size());
  for (FlagId f : z.flags) {
    const auto& chain = p.flag(f).chain;
    for (int k : z.delta)
      seq.push_back(static_cast<VertexId>(offset[static_cast<std::size_t>(k)] + chain[static_cast<std::size_t>(k)]));
  }
  return seq;
}

bool is_simple(const AbstractPolytope& p, const GeneralizedZigzag& z) {
  auto seq = interleaved_shadow(p, z);
  std::sort(seq.begin(), seq.end());
  return std::adjacent_find(seq.begin(), seq.end()) == seq.end();
}

Prop36Report prop_3_6_check(const AbstractPolytope& p) {
  const int n = p.rank();
  const auto fail = [](const std::string& msg) { return Error(ErrorKind::CorrespondenceFailure, msg); };
  const auto fc = flag_complex(p);
  const auto inventory = enumerate_zigzags(fc);
  std::map<std::vector<VertexId>, std::size_t> lookup;
  for (std::size_t i = 0; i < inventory.size(); ++i) lookup.emplace(inventory[i].zero_shadow(), i);

  Prop36Report r;
  r.rank = n;
  r.flags = p.flag_count();
  r.flag_complex_zigzags = inventory.size();
  std::vector<std::size_t> hits(inventory.size(), 0);
  bool simplicity = true;

  std::vector<int> delta(static_cast<std::size_t>(n));
  std::iota(delta.begin(), delta.end(), 0);
  do {
    ++r.permutations;
    const auto orbits = delta_zigzags(p, delta);
    for (const auto& z : orbits) {
      ++r.delta_orbits;
      r.lengths.push_back(z.length());
      const auto image = Zigzag::from_orbit(n, interleaved_shadow(p, z));
      const auto it = lookup.find(image.zero_shadow());
      if (it == lookup.end())
        throw fail("delta-zigzag through flag " + chain_text(p, p.flag(z.flags[0])) +
                   " has no matching zigzag in the flag complex");
      // The flag-complex zigzag traced directly from the seed order must agree.
      Flag seed;
      const auto& chain = p.flag(z.flags[0]).chain;
      const auto offset = vertex_offsets(p);
      for (int k : z.delta)
        seed.vertices.push_back(static_cast<VertexId>(offset[static_cast<std::size_t>(k)] + chain[static_cast<std::size_t>(k)]));
      if (!(zigzag_from_flag(fc, seed) == image))
        throw fail("flag-complex zigzag seeded at " + chain_text(p, p.flag(z.flags[0])) +
                   " differs from the interleaved delta-zigzag shadow");
      if (image.length() != static_cast<std::size_t>(n) * z.length())
        throw fail("flag-complex zigzag of length " + std::to_string(image.length()) + " for a delta-zigzag of length " +
                   std::to_string(z.length()));
      if (image.simple() != is_simple(p, z)) simplicity = false;
      ++hits[it->second];
    }
  } while (std::next_permutation(delta.begin(), delta.end()));

  // Rotating delta by one position and reversing it reach every representation.
  const std::size_t per_class = n == 1 ? 1 : 2 * static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] == 0) throw fail("flag-complex zigzag " + std::to_string(i) + " is not the image of any delta-zigzag");
    if (hits[i] != per_class)
      throw fail("flag-complex zigzag " + std::to_string(i) + " has " + std::to_string(hits[i]) +
                 " delta-zigzag representatives, expected " + std::to_string(per_class));
  }
  if (!simplicity) throw fail("simplicity differs between a delta-zigzag and its flag-complex zigzag");
  r.simplicity_preserved = true;
  r.generalized_zigzags = r.delta_orbits / per_class;

  std::sort(r.lengths.begin(), r.lengths.end());
  r.lengths.erase(std::unique(r.lengths.begin(), r.lengths.end()), r.lengths.end());
  for (const auto& z : inventory) r.flag_complex_lengths.push_back(z.length());
  std::sort(r.flag_complex_lengths.begin(), r.flag_complex_lengths.end());
  r.flag_complex_lengths.erase(std::unique(r.flag_complex_lengths.begin(), r.flag_complex_lengths.end()),
                               r.flag_complex_lengths.end());
  if (r.lengths.size() == 1 && r.flag_complex_lengths.size() == 1) {
    std::size_t fact = 1;
    for (int k = 2; k < n; ++k) fact *= static_cast<std::size_t>(k);
    const std::size_t l = r.lengths[0];
    const std::size_t divisor = static_cast<std::size_t>(orbits_per_zigzag(n)) * l;
    if ((fact * r.flags) % divisor != 0) throw fail("(n-1)!N/2l is not an integer");
    r.expected_count = fact * r.flags / divisor;
    if (*r.expected_count != r.generalized_zigzags)
      throw fail(std::to_string(r.generalized_zigzags) + " generalized zigzags, expected " +
                 std::to_string(*r.expected_count));
  }
  return r;
}

AbstractPolytope regular_polytope_from_string(const CoxeterMatrix& m, std::size_t cap) {
  if (!m.is_string_diagram())
    throw Error(ErrorKind::NotStringDiagram, "Coxeter diagram " + (m.name().empty() ? std::string() : m.name() + " ") +
                                                 "is not a string diagram");
  const auto group = enumerate_group(m, cap);
  const int n = m.rank();
  std::vector<ParabolicCosets> cosets;
  for (int i = 0; i < n; ++i) {
    const int removed[] = {i};
    cosets.push_back(parabolic_cosets(group, removed));
  }
  std::vector<std::vector<std::string>> names(static_cast<std::size_t>(n) + 2);
  names.front() = {"0"};
  names.back() = {"0"};
  for (int k = 0; k < n; ++k)
    for (std::size_t c = 0; c < cosets[static_cast<std::size_t>(k)].count(); ++c)
      names[static_cast<std::size_t>(k) + 1].push_back(std::to_string(c));
  std::vector<Incidence> inc;
  for (FaceId v = 0; v < cosets[0].count(); ++v) inc.push_back({-1, 0, v});
  for (int k = 0; k + 1 < n; ++k) {
    std::vector<Incidence> layer;
    layer.reserve(group.size());
    for (Element w = 0; w < group.size(); ++w)
      layer.push_back({k, cosets[static_cast<std::size_t>(k)].coset_of[w], cosets[static_cast<std::size_t>(k) + 1].coset_of[w]});
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    inc.insert(inc.end(), layer.begin(), layer.end());
  }
  for (FaceId f = 0; f < cosets[static_cast<std::size_t>(n) - 1].count(); ++f) inc.push_back({n - 1, f, 0});
  return AbstractPolytope::build(n, std::move(names), std::move(inc));
}

CoxeterMatrix polytope_diagram(std::string_view name) {
  const std::string s(name);
  const auto family_rank = [&](std::string_view prefix) -> std::optional<int> {
    if (s.rfind(prefix, 0) != 0) return std::nullopt;
    const auto digits = s.substr(prefix.size());
    if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), [](char c) {
          return c >= '0' && c <= '9';
        }))
      throw Error(ErrorKind::NotStringDiagram, "bad rank in polytope name '" + s + "'");
    return std::stoi(digits);
  };
  if (s == "icosahedron") return CoxeterMatrix::named("H3");
  if (s == "24-cell") return CoxeterMatrix::named("F4");
  if (s == "600-cell") return CoxeterMatrix::named("H4");
  if (auto n = family_rank("simplex:")) {
    if (*n < 1) throw Error(ErrorKind::NotStringDiagram, "simplex:n needs n >= 1");
    return CoxeterMatrix::named("A" + std::to_string(*n));
  }
  if (auto n = family_rank("cross:")) {
    if (*n < 2) throw Error(ErrorKind::NotStringDiagram, "cross:n needs n >= 2");
    return CoxeterMatrix::named("B" + std::to_string(*n));
  }
  if (auto n = family_rank("cube:")) {
    if (*n < 2) throw Error(ErrorKind::NotStringDiagram, "cube:n needs n >= 2");
    return CoxeterMatrix::named("B" + std::to_string(*n)).reversed();
  }
  throw Error(ErrorKind::NotStringDiagram, "no built-in string diagram for polytope '" + s + "'");
}

AbstractPolytope polytope_by_name(std::string_view name, std::size_t cap) {
  return regular_polytope_from_string(polytope_diagram(name), cap);
}

}  // namespace zigzag
