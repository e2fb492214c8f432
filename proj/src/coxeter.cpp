#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "zigzag/coxeter.hpp"
#include "zigzag/error.hpp"

namespace zigzag {

namespace {

std::vector<std::vector<int>> identity_rows(int n) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return rows;
}

void link(std::vector<std::vector<int>>& rows, int i, int j, int m) {
  rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m;
  rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = m;
}

// String diagram with labels p_1..p_{n-1} between consecutive generators.
std::vector<std::vector<int>> string_rows(const std::vector<int>& labels) {
  auto rows = identity_rows(static_cast<int>(labels.size()) + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) link(rows, static_cast<int>(i), static_cast<int>(i) + 1, labels[i]);
  return rows;
}

std::string permutation_text(std::span<const int> delta) {
  std::string s = "(";
  for (std::size_t k = 0; k < delta.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(delta[k] + 1);
  }
  return s + ")";
}

std::string element_text(const GroupTable& t, Element w) {
  const auto letters = t.word(w);
  if (letters.empty()) return "e";
  std::string s;
  for (int x : letters) s += "s" + std::to_string(x + 1);
  return s;
}

}  // namespace

CoxeterMatrix CoxeterMatrix::from_rows(std::vector<std::vector<int>> rows) {
  const auto n = rows.size();
  if (n == 0) throw Error(ErrorKind::InvalidCoxeterMatrix, "matrix has no generators");
  if (n > 64) throw Error(ErrorKind::InvalidCoxeterMatrix, "at most 64 generators are supported");
  CoxeterMatrix m;
  m.n_ = static_cast<int>(n);
  m.entries_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw Error(ErrorKind::InvalidCoxeterMatrix, "row " + std::to_string(i + 1) + " has " +
                                                       std::to_string(rows[i].size()) + " entries, expected " +
                                                       std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      const int v = rows[i][j];
      const auto where = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (i == j && v != 1) throw Error(ErrorKind::InvalidCoxeterMatrix, where + " must be 1");
      if (i != j && v < 2) throw Error(ErrorKind::InvalidCoxeterMatrix, where + " must be at least 2");
      if (v != rows[j][i]) throw Error(ErrorKind::InvalidCoxeterMatrix, where + " breaks symmetry");
      m.entries_.push_back(v);
    }
  }
  return m;
}

CoxeterMatrix CoxeterMatrix::named(std::string_view name) {
  const std::string text(name);
  const auto bad = [&] { return Error(ErrorKind::InvalidCoxeterMatrix, "unknown Coxeter type '" + text + "'"); };
  if (text.size() < 2) throw bad();
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::vector<std::vector<int>> rows;
  if (family == 'I') {
    // I2(m)
    if (text.size() < 5 || text[1] != '2' || text[2] != '(' || text.back() != ')') throw bad();
    int mval = 0;
    for (std::size_t k = 3; k + 1 < text.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(text[k])) || mval > 100000) throw bad();
      mval = mval * 10 + (text[k] - '0');
    }
    if (mval < 2) throw bad();
    rows = string_rows({mval});
  } else {
    int n = 0;
    for (std::size_t k = 1; k < text.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(text[k])) || n > 64) throw bad();
      n = n * 10 + (text[k] - '0');
    }
    switch (family) {
      case 'A':
        if (n < 1) throw bad();
        rows = string_rows(std::vector<int>(static_cast<std::size_t>(n - 1), 3));
        break;
      case 'B': {
        if (n < 2) throw bad();
        std::vector<int> labels(static_cast<std::size_t>(n - 1), 3);
        labels.back() = 4;
        rows = string_rows(labels);
        break;
      }
      case 'D':
        if (n < 4) throw bad();
        // Chain 1-2-...-(n-1) with n attached to n-2.
        rows = identity_rows(n);
        for (int i = 0; i + 2 < n; ++i) link(rows, i, i + 1, 3);
        link(rows, n - 3, n - 1, 3);
        break;
      case 'E':
        if (n < 6 || n > 8) throw bad();
        // Bourbaki numbering: 1-3-4-5-...-n with 2 attached to 4.
        rows = identity_rows(n);
        link(rows, 0, 2, 3);
        link(rows, 1, 3, 3);
        for (int i = 2; i + 1 < n; ++i) link(rows, i, i + 1, 3);
        break;
      case 'F':
        if (n != 4) throw bad();
        rows = string_rows({3, 4, 3});
        break;
      case 'H':
        if (n == 3) rows = string_rows({3, 5});
        else if (n == 4) rows = string_rows({3, 3, 5});
        else throw bad();
        break;
      default:
        throw bad();
    }
  }
  auto m = from_rows(std::move(rows));
  m.name_ = text;
  m.name_[0] = family;
  return m;
}

CoxeterMatrix CoxeterMatrix::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<long long> numbers;
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::getline(in, tok);
      continue;
    }
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw Error(ErrorKind::Parse, "not an integer: '" + tok + "'");
    numbers.push_back(v);
  }
  if (numbers.empty()) throw Error(ErrorKind::EmptyInput, "empty Coxeter matrix file");
  const long long n = numbers[0];
  if (n < 1 || n > 64) throw Error(ErrorKind::InvalidCoxeterMatrix, "bad generator count " + std::to_string(n));
  if (static_cast<long long>(numbers.size()) != 1 + n * n)
    throw Error(ErrorKind::Parse, "expected " + std::to_string(n * n) + " matrix entries, found " +
                                      std::to_string(numbers.size() - 1));
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j) {
      const long long v = numbers[static_cast<std::size_t>(1 + i * n + j)];
      if (v < 1 || v > 1'000'000) throw Error(ErrorKind::InvalidCoxeterMatrix, "entry out of range: " + std::to_string(v));
      rows[static_cast<std::size_t>(i)].push_back(static_cast<int>(v));
    }
  return from_rows(std::move(rows));
}

bool CoxeterMatrix::is_string_diagram() const noexcept {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 2; j < n_; ++j)
      if (m(i, j) != 2) return false;
  return true;
}

CoxeterMatrix CoxeterMatrix::reversed() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) rows[static_cast<std::size_t>(i)].push_back(m(n_ - 1 - i, n_ - 1 - j));
  auto out = from_rows(std::move(rows));
  out.name_ = name_;
  return out;
}

std::string CoxeterMatrix::to_text() const {
  std::string s = std::to_string(n_) + "\n";
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) s += ' ';
      s += std::to_string(m(i, j));
    }
    s += '\n';
  }
  return s;
}

std::size_t coxeter_element_order(const GroupTable& t, std::span<const int> order) {
  return t.order(t.from_word(order));
}

CoxeterNumber coxeter_number(const GroupTable& t, std::uint64_t seed) {
  const int n = t.rank();
  std::vector<int> delta(static_cast<std::size_t>(n));
  std::iota(delta.begin(), delta.end(), 0);
  CoxeterNumber result;
  result.h = coxeter_element_order(t, delta);
  result.orders_checked = 1;
  const auto check = [&] {
    const auto h = coxeter_element_order(t, delta);
    ++result.orders_checked;
    if (h != result.h)
      throw Error(ErrorKind::VerificationFailure, "Coxeter element for order " + permutation_text(delta) +
                                                      " has order " + std::to_string(h) + ", expected " +
                                                      std::to_string(result.h));
  };
  std::size_t factorial = 1;
  for (int k = 2; k <= n && factorial <= 24; ++k) factorial *= static_cast<std::size_t>(k);
  if (factorial <= 24) {
    while (std::next_permutation(delta.begin(), delta.end())) check();
  } else {
    std::mt19937_64 rng(seed);
    for (int k = 1; k < 24; ++k) {
      std::shuffle(delta.begin(), delta.end(), rng);
      check();
    }
  }
  return result;
}

CoxeterNumber coxeter_number(const CoxeterMatrix& m, std::size_t cap, std::uint64_t seed) {
  return coxeter_number(enumerate_group(m, cap), seed);
}

ParabolicCosets parabolic_cosets(const GroupTable& t, std::span<const int> removed) {
  const int n = t.rank();
  std::vector<bool> allowed(static_cast<std::size_t>(n), true);
  ParabolicCosets out;
  for (int i : removed) {
    if (i < 0 || i >= n)
      throw Error(ErrorKind::ParameterOutOfRange, "generator index " + std::to_string(i + 1) + " out of range");
    allowed[static_cast<std::size_t>(i)] = false;
  }
  for (int i = 0; i < n; ++i)
    if (!allowed[static_cast<std::size_t>(i)]) out.removed.push_back(i);

  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  out.coset_of.assign(t.size(), kUnset);
  std::vector<Element> queue;
  for (Element w = 0; w < t.size(); ++w) {
    if (out.coset_of[w] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.representative.size());
    out.representative.push_back(w);
    out.coset_of[w] = id;
    queue.assign(1, w);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (int s = 0; s < n; ++s) {
        if (!allowed[static_cast<std::size_t>(s)]) continue;
        const Element v = t.right(queue[head], s);
        if (out.coset_of[v] == kUnset) {
          out.coset_of[v] = id;
          queue.push_back(v);
        }
      }
  }
  return out;
}

bool distinct_reduced_expression_exists(const GroupTable& t, Element w) {
  const int n = t.rank();
  if (t.length(w) > n)
    throw Error(ErrorKind::LengthTooLarge, "element of length " + std::to_string(t.length(w)) +
                                               " exceeds the rank " + std::to_string(n));
  // Peel off last letters s with l(ws) = l(w) - 1, never reusing a letter.
  const auto search = [&](auto&& self, Element v, std::uint64_t used) -> bool {
    if (v == GroupTable::identity()) return true;
    for (int s = 0; s < n; ++s) {
      if (used >> s & 1u) continue;
      const Element u = t.right(v, s);
      if (t.length(u) == t.length(v) - 1 && self(self, u, used | (std::uint64_t{1} << s))) return true;
    }
    return false;
  };
  return search(search, w, 0);
}

CoxeterComplex CoxeterComplex::build(const CoxeterMatrix& m, std::size_t cap) {
  return build(enumerate_group(m, cap));
}

CoxeterComplex CoxeterComplex::build(GroupTable group) {
  const int n = group.rank();
  std::vector<ParabolicCosets> cosets;
  std::vector<std::size_t> offset;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    const int removed[] = {i};
    cosets.push_back(parabolic_cosets(group, removed));
    offset.push_back(labels.size());
    for (std::size_t c = 0; c < cosets.back().count(); ++c)
      labels.push_back(std::to_string(i + 1) + ":" + std::to_string(c));
  }
  std::vector<std::vector<VertexId>> facets(group.size());
  for (Element w = 0; w < group.size(); ++w)
    for (int i = 0; i < n; ++i)
      facets[w].push_back(static_cast<VertexId>(offset[static_cast<std::size_t>(i)] +
                                                cosets[static_cast<std::size_t>(i)].coset_of[w]));
  auto complex = ThinChamberComplex::validate(Complex::from_ids(std::move(labels), facets));
  return CoxeterComplex(std::move(group), std::move(cosets), std::move(offset), std::move(complex));
}

int CoxeterComplex::vertex_type(VertexId v) const noexcept {
  const auto it = std::upper_bound(offset_.begin(), offset_.end(), static_cast<std::size_t>(v));
  return static_cast<int>(it - offset_.begin()) - 1;
}

Flag CoxeterComplex::coxeter_flag(Element w, std::span<const int> delta) const {
  Flag f;
  for (int type : delta) f.vertices.push_back(vertex_of(w, type));
  return f;
}

std::vector<VertexId> CoxeterComplex::left_multiplication(Element w) const {
  const auto table = group_.left_multiplication(w);
  std::vector<VertexId> map(complex_.num_vertices());
  for (int i = 0; i < rank(); ++i) {
    const auto& cos = cosets_[static_cast<std::size_t>(i)];
    for (std::uint32_t c = 0; c < cos.count(); ++c)
      map[static_cast<std::size_t>(vertex(i, c))] = vertex(i, cos.coset_of[table[cos.representative[c]]]);
  }
  return map;
}

ThinChamberComplex coxeter_complex(const CoxeterMatrix& m, std::size_t cap) {
  return CoxeterComplex::build(m, cap).complex();
}

Flag apply_automorphism(std::span<const VertexId> vertex_map, const Flag& flag) {
  Flag out;
  out.vertices.reserve(flag.size());
  for (VertexId v : flag.vertices) out.vertices.push_back(vertex_map[static_cast<std::size_t>(v)]);
  return out;
}

Prop35Report verify_prop_3_5(const CoxeterComplex& cc, std::size_t samples, std::uint64_t seed) {
  const auto& t = cc.group();
  const auto& complex = cc.complex();
  const int n = t.rank();
  const auto fail = [](const std::string& msg) { return Error(ErrorKind::VerificationFailure, msg); };

  Prop35Report r;
  r.name = t.matrix().name();
  r.rank = n;
  r.group_order = t.size();
  r.coxeter_number = coxeter_number(t, seed).h;
  const std::size_t h = r.coxeter_number;

  std::size_t fact = 1;
  for (int k = 2; k < n; ++k) fact *= static_cast<std::size_t>(k);
  const std::size_t divisor = static_cast<std::size_t>(orbits_per_zigzag(n)) * h;
  if ((t.size() * fact) % divisor != 0)
    throw fail("|W|(n-1)!/2h is not an integer for |W|=" + std::to_string(t.size()) + ", h=" + std::to_string(h));
  r.expected_count = t.size() * fact / divisor;
  r.expected_length = static_cast<std::size_t>(n) * h;

  const auto inventory = enumerate_zigzags(complex);
  const auto pred = zigzag_predicates(complex, inventory);
  r.zigzag_count = inventory.size();
  r.z_simple = pred.z_simple;
  r.z_uniform = pred.z_uniform;
  r.zigzag_length = pred.common_length.value_or(0);
  for (const auto& z : inventory) {
    if (!z.simple()) {
      std::string seq;
      for (VertexId v : z.zero_shadow()) seq += complex.complex().label(v) + " ";
      throw fail("zigzag is not simple: " + seq);
    }
    if (z.length() != r.expected_length)
      throw fail("zigzag of length " + std::to_string(z.length()) + ", expected " + std::to_string(r.expected_length));
  }
  if (r.zigzag_count != r.expected_count)
    throw fail(std::to_string(r.zigzag_count) + " zigzags, expected " + std::to_string(r.expected_count));

  std::mt19937_64 rng(seed);
  std::vector<int> delta(static_cast<std::size_t>(n));
  std::iota(delta.begin(), delta.end(), 0);
  std::vector<Element> prefix(static_cast<std::size_t>(n) + 1);
  for (std::size_t sample = 0; sample < samples; ++sample) {
    if (sample > 0) std::shuffle(delta.begin(), delta.end(), rng);
    const Element w = sample == 0 ? GroupTable::identity()
                                  : static_cast<Element>(std::uniform_int_distribution<std::size_t>(0, t.size() - 1)(rng));
    // prefix[k] = s_d(1) ... s_d(k); prefix[n] = s_delta
    prefix[0] = GroupTable::identity();
    for (int k = 0; k < n; ++k) prefix[static_cast<std::size_t>(k) + 1] = t.right(prefix[static_cast<std::size_t>(k)], delta[static_cast<std::size_t>(k)]);
    const Element s_delta = prefix[static_cast<std::size_t>(n)];

    Element power = s_delta;
    for (std::size_t m = 1; m < h; ++m) {
      for (int i = 0; i < n; ++i)
        if (cc.maximal_cosets(i).coset_of[power] == 0)
          throw fail("s_delta^" + std::to_string(m) + " lies in W^" + std::to_string(i + 1) + " for delta " +
                     permutation_text(delta));
      ++r.powers_checked;
      power = t.multiply(power, s_delta);
    }

    const Flag f = cc.coxeter_flag(w, delta);
    const auto seq = orbit_vertex_sequence(complex, f);
    const std::string where = " for w=" + element_text(t, w) + ", delta " + permutation_text(delta);
    if (seq.size() != r.expected_length)
      throw fail("orbit length " + std::to_string(seq.size()) + where);
    Element ws = w;  // w s_delta^m
    for (std::size_t m = 0; m < h; ++m) {
      for (int k = 0; k < n; ++k) {
        const std::size_t pos = m * static_cast<std::size_t>(n) + static_cast<std::size_t>(k);
        if (seq[pos] != cc.vertex_of(ws, delta[static_cast<std::size_t>(k)]))
          throw fail("0-shadow entry " + std::to_string(pos) + " differs from w s_delta^" + std::to_string(m) +
                     " W^" + std::to_string(delta[static_cast<std::size_t>(k)] + 1) + where);
        const Element expected = t.multiply(ws, prefix[static_cast<std::size_t>(k)]);
        const auto facet = complex.facet(expected);
        std::vector<VertexId> window(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) window[static_cast<std::size_t>(j)] = seq[(pos + static_cast<std::size_t>(j)) % seq.size()];
        std::sort(window.begin(), window.end());
        if (!std::equal(window.begin(), window.end(), facet.begin(), facet.end()))
          throw fail("(n-1)-shadow entry " + std::to_string(pos) + " is not the facet of " +
                     element_text(t, expected) + where);
      }
      ws = t.multiply(ws, s_delta);
    }
    if (ws != w) throw fail("w s_delta^h != w" + where);
    ++r.shadows_checked;
  }
  return r;
}

}  // namespace zigzag
