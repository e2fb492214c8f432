#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "zigzag/complex.hpp"
#include "zigzag/error.hpp"

namespace zigzag {

Complex parse_cplx(std::string_view text) {
  std::vector<std::vector<std::string>> facets;
  std::vector<std::size_t> line_of_facet;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream tokens{std::string(line)};
    std::vector<std::string> facet;
    for (std::string tok; tokens >> tok;) facet.push_back(std::move(tok));
    if (!facet.empty()) {
      facets.push_back(std::move(facet));
      line_of_facet.push_back(line_no);
    }
    pos = end + 1;
  }
  if (facets.empty()) throw Error(ErrorKind::EmptyInput, "no facets in input");
  try {
    return Complex::build(facets);
  } catch (const Error& e) {
    // Point at the offending line where the message names a facet number.
    std::string msg = e.what();
    const std::string marker = "facet ";
    if (auto at = msg.find(marker); at != std::string::npos) {
      std::size_t idx = 0, p = at + marker.size();
      while (p < msg.size() && std::isdigit(static_cast<unsigned char>(msg[p]))) idx = idx * 10 + (msg[p++] - '0');
      if (idx >= 1 && idx <= line_of_facet.size()) {
        auto colon = msg.find(": ");
        std::string body = colon == std::string::npos ? msg : msg.substr(colon + 2);
        throw Error(e.kind(), "line " + std::to_string(line_of_facet[idx - 1]) + ": " + body);
      }
    }
    throw;
  }
}

Complex read_cplx_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cplx(buf.str());
}

Complex canonical_form(const Complex& c) {
  // Greedy listing: repeatedly emit the facet that is least under the partial
  // relabelling, where not-yet-relabelled vertices sort after every relabelled
  // one. Newly seen vertices get the next ids in emission order. The result is
  // sorted under its own first-appearance order.
  const std::size_t nf = c.num_facets();
  const int n = c.rank();
  constexpr VertexId kUnassigned = -1;
  std::vector<VertexId> new_id(c.num_vertices(), kUnassigned);
  std::vector<std::vector<std::size_t>> facets_of_vertex(c.num_vertices());
  for (std::size_t f = 0; f < nf; ++f)
    for (VertexId v : c.facet(f)) facets_of_vertex[v].push_back(f);

  // key: relabelled vertices ascending, then a sentinel per unassigned vertex,
  // then the facet's original index as tie-break.
  using Key = std::pair<std::vector<VertexId>, std::size_t>;
  auto key_of = [&](std::size_t f) {
    std::vector<VertexId> k;
    k.reserve(n);
    int unassigned = 0;
    for (VertexId v : c.facet(f)) {
      if (new_id[v] == kUnassigned) ++unassigned;
      else k.push_back(new_id[v]);
    }
    std::sort(k.begin(), k.end());
    k.insert(k.end(), unassigned, std::numeric_limits<VertexId>::max());
    return Key{std::move(k), f};
  };
  std::set<Key> queue;
  std::vector<Key> current(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    current[f] = key_of(f);
    queue.insert(current[f]);
  }
  std::vector<bool> emitted(nf, false);
  std::vector<std::string> labels;
  std::vector<std::vector<VertexId>> facets;
  facets.reserve(nf);
  VertexId next = 0;
  while (!queue.empty()) {
    const std::size_t f = queue.begin()->second;
    queue.erase(queue.begin());
    emitted[f] = true;
    std::vector<VertexId> fresh;
    for (VertexId v : c.facet(f))
      if (new_id[v] == kUnassigned) fresh.push_back(v);
    for (VertexId v : fresh) {
      new_id[v] = next++;
      labels.push_back(c.label(v));
    }
    std::vector<VertexId> row;
    for (VertexId v : c.facet(f)) row.push_back(new_id[v]);
    facets.push_back(std::move(row));
    for (VertexId v : fresh)
      for (std::size_t g : facets_of_vertex[v]) {
        if (emitted[g]) continue;
        queue.erase(current[g]);
        current[g] = key_of(g);
        queue.insert(current[g]);
      }
  }
  return Complex::from_ids(std::move(labels), facets);
}

std::string write_cplx(const Complex& c) {
  const Complex canon = canonical_form(c);
  std::vector<std::size_t> order(canon.num_facets());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto fa = canon.facet(a), fb = canon.facet(b);
    return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
  });
  std::string out;
  for (std::size_t f : order) {
    bool first = true;
    for (VertexId v : canon.facet(f)) {
      if (!first) out += ' ';
      out += canon.label(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace zigzag
