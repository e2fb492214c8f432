#include "zigzag/zigzag.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "zigzag/error.hpp"

namespace zigzag {

namespace {

constexpr int kMaxCodecRank = 20;

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::string describe(std::span<const VertexId> seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(seq[i]);
  }
  return s + ")";
}

// Sorted position of each flag vertex inside its facet.
std::vector<int> positions_in_facet(std::span<const VertexId> facet, std::span<const VertexId> seq) {
  std::vector<int> pos(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i)
    pos[i] = static_cast<int>(std::lower_bound(facet.begin(), facet.end(), seq[i]) - facet.begin());
  return pos;
}

std::size_t facet_of(const ThinChamberComplex& complex, std::span<const VertexId> seq) {
  Face f(seq.begin(), seq.end());
  std::sort(f.begin(), f.end());
  auto idx = complex.complex().find_facet(f);
  if (!idx) throw Error(ErrorKind::NotAFlag, "vertices " + describe(seq) + " do not form a facet");
  return *idx;
}

}  // namespace

Face Flag::face(int i) const {
  Face f(vertices.begin(), vertices.begin() + i + 1);
  std::sort(f.begin(), f.end());
  return f;
}

Flag make_flag(const ThinChamberComplex& complex, std::span<const VertexId> vertices) {
  if (static_cast<int>(vertices.size()) != complex.rank())
    throw Error(ErrorKind::NotAFlag, "flag needs " + std::to_string(complex.rank()) + " vertices");
  Face sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorKind::NotAFlag, "repeated vertex in " + describe(vertices));
  facet_of(complex, vertices);
  return Flag{std::vector<VertexId>(vertices.begin(), vertices.end())};
}

Flag sigma(const ThinChamberComplex& complex, const Flag& flag, int i) {
  const int n = complex.rank();
  if (i < 0 || i > n - 1)
    throw Error(ErrorKind::LevelOutOfRange, "sigma index " + std::to_string(i) + " outside 0.." + std::to_string(n - 1));
  Flag out = flag;
  if (i < n - 1) {
    std::swap(out.vertices[i], out.vertices[i + 1]);
    return out;
  }
  const std::size_t f = facet_of(complex, flag.vertices);
  auto facet = complex.facet(f);
  const int j = static_cast<int>(std::lower_bound(facet.begin(), facet.end(), flag.vertices[n - 1]) - facet.begin());
  out.vertices[n - 1] = complex.opposite_vertex(f, j);
  return out;
}

Flag t_step(const ThinChamberComplex& complex, const Flag& flag) {
  const std::size_t f = facet_of(complex, flag.vertices);
  auto facet = complex.facet(f);
  const int j = static_cast<int>(std::lower_bound(facet.begin(), facet.end(), flag.vertices[0]) - facet.begin());
  Flag out;
  out.vertices.assign(flag.vertices.begin() + 1, flag.vertices.end());
  out.vertices.push_back(complex.opposite_vertex(f, j));
  return out;
}

Flag reverse_flag(const Flag& flag) {
  Flag out = flag;
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

std::size_t least_rotation(std::span<const VertexId> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const VertexId a = s[(i + k) % n], b = s[(j + k) % n];
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

// ---------------------------------------------------------------------------
// Zigzag

Zigzag Zigzag::from_orbit(int rank, std::vector<VertexId> seq) {
  const std::size_t l = seq.size();
  std::vector<VertexId> forward(l), backward(l);
  const std::size_t r = least_rotation(seq);
  for (std::size_t i = 0; i < l; ++i) forward[i] = seq[(r + i) % l];
  std::vector<VertexId> rev(seq.rbegin(), seq.rend());
  const std::size_t rr = least_rotation(rev);
  for (std::size_t i = 0; i < l; ++i) backward[i] = rev[(rr + i) % l];
  Zigzag z;
  z.rank_ = rank;
  z.vertices_ = std::min(forward, backward);
  return z;
}

Flag Zigzag::flag(std::size_t i) const {
  Flag f;
  f.vertices.reserve(rank_);
  for (int k = 0; k < rank_; ++k) f.vertices.push_back(vertex(i + k));
  return f;
}

std::vector<Flag> Zigzag::flags() const {
  std::vector<Flag> out;
  out.reserve(length());
  for (std::size_t i = 0; i < length(); ++i) out.push_back(flag(i));
  return out;
}

bool Zigzag::simple() const {
  std::vector<VertexId> s = vertices_;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

// ---------------------------------------------------------------------------
// Orbits and shadows

std::vector<VertexId> orbit_vertex_sequence(const ThinChamberComplex& complex, const Flag& flag) {
  const int n = complex.rank();
  const std::size_t start_facet = facet_of(complex, flag.vertices);
  const std::vector<int> start = positions_in_facet(complex.facet(start_facet), flag.vertices);
  std::size_t f = start_facet;
  std::vector<int> p = start, q(n);
  std::vector<VertexId> seq;
  do {
    seq.push_back(complex.facet(f)[p[0]]);
    const int j = p[0];
    auto map = complex.position_map(f, j);
    for (int i = 0; i + 1 < n; ++i) q[i] = map[p[i + 1]];
    q[n - 1] = map[j];
    f = complex.neighbor(f, j);
    std::swap(p, q);
  } while (f != start_facet || p != start);
  return seq;
}

Shadow shadow_of_sequence(int rank, std::span<const VertexId> seq, int level) {
  if (level < 0 || level > rank - 1)
    throw Error(ErrorKind::LevelOutOfRange, "shadow level " + std::to_string(level) + " outside 0.." +
                                               std::to_string(rank - 1));
  Shadow s;
  s.level = level;
  const std::size_t l = seq.size();
  s.faces.reserve(l);
  for (std::size_t i = 0; i < l; ++i) {
    Face f;
    f.reserve(level + 1);
    for (int k = 0; k <= level; ++k) f.push_back(seq[(i + k) % l]);
    std::sort(f.begin(), f.end());
    s.faces.push_back(std::move(f));
  }
  return s;
}

Zigzag zigzag_from_flag(const ThinChamberComplex& complex, const Flag& flag) {
  return Zigzag::from_orbit(complex.rank(), orbit_vertex_sequence(complex, flag));
}

Shadow shadow(const Zigzag& zigzag, int level) {
  return shadow_of_sequence(zigzag.rank(), zigzag.zero_shadow(), level);
}

Zigzag zigzag_from_vertex_sequence(const ThinChamberComplex& complex, std::span<const VertexId> seq) {
  const int n = complex.rank();
  const std::size_t l = seq.size();
  if (l == 0) throw Error(ErrorKind::Z1Violation, "empty sequence");
  for (std::size_t i = 0; i < l; ++i) {
    Face window;
    for (int k = 0; k < n; ++k) window.push_back(seq[(i + k) % l]);
    std::sort(window.begin(), window.end());
    if (std::adjacent_find(window.begin(), window.end()) != window.end() || !complex.complex().find_facet(window))
      throw Error(ErrorKind::Z1Violation, "window at index " + std::to_string(i) + " is not a facet");
  }
  for (std::size_t i = 0; i < l; ++i)
    if (seq[i] == seq[(i + n) % l])
      throw Error(ErrorKind::Z2Violation, "x_" + std::to_string(i) + " equals x_" + std::to_string(i + n));

  // Z1 and Z2 make every window the T-image of the previous one, so the orbit
  // of the first window traces the sequence; its period may divide l.
  Flag first{std::vector<VertexId>(seq.begin(), seq.begin() + std::min<std::size_t>(n, l))};
  std::vector<VertexId> orbit = orbit_vertex_sequence(complex, first);
  bool traced = l % orbit.size() == 0;
  for (std::size_t i = 0; traced && i < l; ++i) traced = orbit[i % orbit.size()] == seq[i];
  if (!traced)
    throw Error(ErrorKind::VerificationFailure, "sequence satisfies Z1/Z2 but is not a T-orbit");
  return Zigzag::from_orbit(n, std::move(orbit));
}

Zigzag reconstruct_from_shadow(const ThinChamberComplex& complex, const Shadow& input) {
  const int n = complex.rank();
  const int k = input.level;
  if (k < 0 || k > n - 1)
    throw Error(ErrorKind::LevelOutOfRange, "shadow level " + std::to_string(k) + " outside 0.." + std::to_string(n - 1));
  const std::size_t l = input.faces.size();
  if (l <= static_cast<std::size_t>(n))
    throw Error(ErrorKind::NotAShadow, "a zigzag has length greater than the rank");
  std::vector<Face> level = input.faces;
  for (std::size_t i = 0; i < l; ++i) {
    if (static_cast<int>(level[i].size()) != k + 1 || !std::is_sorted(level[i].begin(), level[i].end()) ||
        !complex.is_face(level[i]))
      throw Error(ErrorKind::NotAShadow, "entry " + std::to_string(i) + " is not a " + std::to_string(k) + "-face");
  }
  // Ascend with the union rule until the faces are facets.
  for (int cur = k; cur < n - 1; ++cur) {
    std::vector<Face> next(l);
    for (std::size_t i = 0; i < l; ++i) {
      next[i] = face_union(level[i], level[(i + 1) % l]);
      if (static_cast<int>(next[i].size()) != cur + 2 || !complex.is_face(next[i]))
        throw Error(ErrorKind::NotAShadow, "union of entries " + std::to_string(i) + " and " +
                                               std::to_string((i + 1) % l) + " is not a " + std::to_string(cur + 1) +
                                               "-face");
    }
    level = std::move(next);
  }
  // At facet level, x_i is the vertex of Y_i missing from Y_{i+1}.
  std::vector<VertexId> seq(l);
  for (std::size_t i = 0; i < l; ++i) {
    Face diff;
    const Face& a = level[i];
    const Face& b = level[(i + 1) % l];
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    if (diff.size() != 1)
      throw Error(ErrorKind::NotAShadow, "facets " + std::to_string(i) + " and " + std::to_string((i + 1) % l) +
                                             " are not adjacent");
    seq[i] = diff[0];
  }
  Zigzag z;
  try {
    z = zigzag_from_vertex_sequence(complex, seq);
  } catch (const Error& e) {
    throw Error(ErrorKind::NotAShadow, std::string("reconstructed sequence fails: ") + e.what());
  }
  if (z.length() != l || shadow_of_sequence(n, seq, k) != input)
    throw Error(ErrorKind::NotAShadow, "input differs from the shadow of the reconstructed zigzag");
  return z;
}

// ---------------------------------------------------------------------------
// Dense flag codec

FlagCodec::FlagCodec(const ThinChamberComplex& complex) : complex_(&complex), rank_(complex.rank()) {
  if (rank_ > kMaxCodecRank) throw Error(ErrorKind::TooManyFlags, "rank too large for flag enumeration");
  perms_ = factorial(rank_);
  total_ = perms_ * complex.num_facets();
  if (complex.num_facets() != 0 && total_ / complex.num_facets() != perms_)
    throw Error(ErrorKind::TooManyFlags, "flag count overflows");
}

std::uint64_t FlagCodec::encode(const Flag& flag) const {
  const std::size_t f = facet_of(*complex_, flag.vertices);
  std::vector<int> p = positions_in_facet(complex_->facet(f), flag.vertices);
  // Lehmer code.
  std::uint64_t r = 0;
  for (int i = 0; i < rank_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < rank_; ++j)
      if (p[j] < p[i]) ++smaller;
    r = r * static_cast<std::uint64_t>(rank_ - i) + static_cast<std::uint64_t>(smaller);
  }
  return static_cast<std::uint64_t>(f) * perms_ + r;
}

Flag FlagCodec::decode(std::uint64_t id) const {
  const std::size_t f = static_cast<std::size_t>(id / perms_);
  std::uint64_t r = id % perms_;
  std::vector<int> digits(rank_);
  for (int i = rank_ - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(rank_ - i);
    digits[i] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<int> pool(rank_);
  for (int i = 0; i < rank_; ++i) pool[i] = i;
  Flag flag;
  auto facet = complex_->facet(f);
  for (int i = 0; i < rank_; ++i) {
    flag.vertices.push_back(facet[pool[digits[i]]]);
    pool.erase(pool.begin() + digits[i]);
  }
  return flag;
}

std::uint64_t FlagCodec::t_step(std::uint64_t id) const { return encode(zigzag::t_step(*complex_, decode(id))); }

std::uint64_t FlagCodec::reverse(std::uint64_t id) const { return encode(reverse_flag(decode(id))); }

std::uint64_t flag_count(const ThinChamberComplex& complex) {
  return factorial(complex.rank()) * complex.num_facets();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Orbit walker over (facet, position permutation) pairs with an incremental
// Lehmer rank, avoiding the hash lookup that decode/encode need.
struct Walker {
  const ThinChamberComplex& complex;
  int n;
  std::uint64_t perms;

  std::uint64_t rank_of(std::size_t f, const std::vector<int>& p) const {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n; ++j)
        if (p[j] < p[i]) ++smaller;
      r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return static_cast<std::uint64_t>(f) * perms + r;
  }

  void unrank(std::uint64_t id, std::size_t& f, std::vector<int>& p) const {
    f = static_cast<std::size_t>(id / perms);
    std::uint64_t r = id % perms;
    std::vector<int> digits(n);
    for (int i = n - 1; i >= 0; --i) {
      const auto base = static_cast<std::uint64_t>(n - i);
      digits[i] = static_cast<int>(r % base);
      r /= base;
    }
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    p.resize(n);
    for (int i = 0; i < n; ++i) {
      p[i] = pool[digits[i]];
      pool.erase(pool.begin() + digits[i]);
    }
  }
};

}  // namespace

std::vector<Zigzag> enumerate_zigzags(const ThinChamberComplex& complex) {
  const int n = complex.rank();
  FlagCodec codec(complex);
  const std::uint64_t total = codec.size();
  if (total > (std::uint64_t{1} << 32)) throw Error(ErrorKind::TooManyFlags, std::to_string(total) + " flags");
  Walker walk{complex, n, factorial(n)};
  std::vector<bool> visited(total, false);
  std::vector<Zigzag> out;
  std::vector<int> p, q(n), rev(n);
  std::vector<VertexId> seq;
  for (std::uint64_t id = 0; id < total; ++id) {
    if (visited[id]) continue;
    std::size_t f;
    walk.unrank(id, f, p);
    const std::size_t f0 = f;
    const std::vector<int> p0 = p;
    seq.clear();
    do {
      visited[walk.rank_of(f, p)] = true;
      for (int i = 0; i < n; ++i) rev[i] = p[n - 1 - i];
      visited[walk.rank_of(f, rev)] = true;
      seq.push_back(complex.facet(f)[p[0]]);
      const int j = p[0];
      auto map = complex.position_map(f, j);
      for (int i = 0; i + 1 < n; ++i) q[i] = map[p[i + 1]];
      q[n - 1] = map[j];
      f = complex.neighbor(f, j);
      std::swap(p, q);
    } while (f != f0 || p != p0);
    out.push_back(Zigzag::from_orbit(n, seq));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ZigzagPredicates zigzag_predicates(const ThinChamberComplex& complex, std::span<const Zigzag> inventory) {
  ZigzagPredicates p;
  p.count = inventory.size();
  p.flags = flag_count(complex);
  p.z_simple = std::all_of(inventory.begin(), inventory.end(), [](const Zigzag& z) { return z.simple(); });
  p.z_uniform = !inventory.empty() && std::all_of(inventory.begin(), inventory.end(), [&](const Zigzag& z) {
    return z.length() == inventory.front().length();
  });
  if (p.z_uniform) {
    p.common_length = inventory.front().length();
    p.count_formula_holds = static_cast<std::uint64_t>(p.count) * orbits_per_zigzag(complex.rank()) * *p.common_length == p.flags;
  }
  return p;
}

ZigzagPredicates zigzag_predicates(const ThinChamberComplex& complex) {
  const auto inventory = enumerate_zigzags(complex);
  return zigzag_predicates(complex, inventory);
}

}  // namespace zigzag
