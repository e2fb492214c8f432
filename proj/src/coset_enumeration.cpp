// Felsch-style coset enumeration of a Coxeter presentation over the trivial
// subgroup. Every generator is an involution, so a single column per generator
// serves as both the action and its inverse, and the relators reduce to the
// words (s_i s_j)^{m_ij}.

#include <algorithm>
#include <deque>
#include <string>

#include "zigzag/coxeter.hpp"
#include "zigzag/error.hpp"

namespace zigzag {

namespace {

constexpr std::int32_t kUndefined = -1;

class CosetTable {
 public:
  CosetTable(const CoxeterMatrix& m, std::size_t row_limit) : n_(m.rank()), row_limit_(row_limit) {
    // A cyclic conjugate of (s_i s_j)^m starting with s_x is (s_x s_y)^m, so the
    // relator words grouped by their first letter are all that deductions need.
    starting_with_.resize(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        if (x == y) continue;
        std::vector<int> word;
        for (int k = 0; k < m.m(x, y); ++k) {
          word.push_back(x);
          word.push_back(y);
        }
        starting_with_[static_cast<std::size_t>(x)].push_back(std::move(word));
      }
    new_row();
  }

  // Runs to completion. Returns false when the row budget is exhausted.
  bool run() {
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      for (int x = 0; x < n_; ++x) {
        if (forward_[c] != static_cast<std::int32_t>(c)) break;  // coset died meanwhile
        if (at(static_cast<std::int32_t>(c), x) != kUndefined) continue;
        if (forward_.size() >= row_limit_) {
          c = compact(c);
          if (forward_.size() * 2 > row_limit_) return false;
        }
        const auto d = new_row();
        set(static_cast<std::int32_t>(c), x, d);
        deductions_.push_back({static_cast<std::int32_t>(c), x});
        process_deductions();
      }
    }
    return true;
  }

  // Live cosets with their rows, coset 0 first. Only valid after run().
  std::vector<std::int32_t> live_cosets() const {
    std::vector<std::int32_t> live;
    for (std::size_t c = 0; c < forward_.size(); ++c)
      if (forward_[c] == static_cast<std::int32_t>(c)) live.push_back(static_cast<std::int32_t>(c));
    return live;
  }
  std::int32_t at(std::int32_t c, int x) const { return table_[static_cast<std::size_t>(c) * n_ + x]; }

 private:
  struct Deduction {
    std::int32_t coset;
    int gen;
  };

  std::int32_t new_row() {
    const auto id = static_cast<std::int32_t>(forward_.size());
    table_.insert(table_.end(), static_cast<std::size_t>(n_), kUndefined);
    forward_.push_back(id);
    return id;
  }
  void set(std::int32_t c, int x, std::int32_t d) {
    table_[static_cast<std::size_t>(c) * n_ + x] = d;
    table_[static_cast<std::size_t>(d) * n_ + x] = c;
  }
  void clear(std::int32_t c, int x) { table_[static_cast<std::size_t>(c) * n_ + x] = kUndefined; }
  bool live(std::int32_t c) const { return forward_[static_cast<std::size_t>(c)] == c; }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (forward_[static_cast<std::size_t>(r)] != r) r = forward_[static_cast<std::size_t>(r)];
    while (forward_[static_cast<std::size_t>(c)] != r) {
      const auto next = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const Deduction d = deductions_.back();
      deductions_.pop_back();
      if (!live(d.coset)) continue;
      const auto image = at(d.coset, d.gen);
      for (const auto& word : starting_with_[static_cast<std::size_t>(d.gen)]) {
        if (!live(d.coset)) break;
        scan(d.coset, word);
      }
      if (image == kUndefined) continue;
      const auto other = rep(image);
      for (const auto& word : starting_with_[static_cast<std::size_t>(d.gen)]) {
        if (!live(other)) break;
        scan(other, word);
      }
    }
  }

  // Scans coset c under the relator `word`, filling a single gap as a deduction
  // or merging cosets when both ends meet inconsistently.
  void scan(std::int32_t c, const std::vector<int>& word) {
    const int len = static_cast<int>(word.size());
    std::int32_t f = c;
    int i = 0;
    while (i < len) {
      const auto next = at(f, word[static_cast<std::size_t>(i)]);
      if (next == kUndefined) break;
      f = next;
      ++i;
    }
    if (i == len) {
      if (f != c) coincidence(f, c);
      return;
    }
    std::int32_t b = c;
    int j = len - 1;
    while (j >= i) {
      const auto next = at(b, word[static_cast<std::size_t>(j)]);
      if (next == kUndefined) break;
      b = next;
      --j;
    }
    if (j < i) {
      coincidence(f, b);
    } else if (j == i) {
      const int x = word[static_cast<std::size_t>(i)];
      set(f, x, b);
      deductions_.push_back({f, x});
    }
  }

  void merge(std::int32_t a, std::int32_t b, std::deque<std::int32_t>& dead) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[static_cast<std::size_t>(b)] = a;
    dead.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::deque<std::int32_t> dead;
    merge(a, b, dead);
    while (!dead.empty()) {
      const auto g = dead.front();
      dead.pop_front();
      for (int x = 0; x < n_; ++x) {
        const auto d = at(g, x);
        if (d == kUndefined) continue;
        if (at(d, x) == g) clear(d, x);
        const auto mu = rep(g);
        const auto nu = rep(d);
        if (at(mu, x) != kUndefined) {
          merge(nu, at(mu, x), dead);
        } else if (at(nu, x) != kUndefined) {
          merge(mu, at(nu, x), dead);
        } else {
          set(mu, x, nu);
          deductions_.push_back({mu, x});
        }
      }
    }
  }

  // Renumbers live cosets densely, preserving order. Returns the new index of
  // the coset the main loop is working on.
  std::size_t compact(std::size_t current) {
    std::vector<std::int32_t> renumber(forward_.size(), kUndefined);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < forward_.size(); ++c)
      if (live(static_cast<std::int32_t>(c))) renumber[c] = next++;
    std::vector<std::int32_t> table(static_cast<std::size_t>(next) * n_, kUndefined);
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      if (renumber[c] == kUndefined) continue;
      for (int x = 0; x < n_; ++x) {
        const auto d = at(static_cast<std::int32_t>(c), x);
        if (d != kUndefined) table[static_cast<std::size_t>(renumber[c]) * n_ + x] = renumber[static_cast<std::size_t>(rep(d))];
      }
    }
    const auto result = static_cast<std::size_t>(renumber[current]);
    table_ = std::move(table);
    forward_.resize(static_cast<std::size_t>(next));
    for (std::int32_t c = 0; c < next; ++c) forward_[static_cast<std::size_t>(c)] = c;
    return result;
  }

  int n_;
  std::size_t row_limit_;
  std::vector<std::vector<std::vector<int>>> starting_with_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> forward_;
  std::vector<Deduction> deductions_;
};

}  // namespace

GroupTable enumerate_group(const CoxeterMatrix& m, std::size_t cap) {
  if (cap < 1) throw Error(ErrorKind::ParameterOutOfRange, "element cap must be at least 1");
  const int n = m.rank();
  const std::size_t row_limit = std::max<std::size_t>(4 * cap, 1024);
  CosetTable table(m, row_limit);
  const auto budget_error = [&] {
    return Error(ErrorKind::BudgetExceeded, "group " + (m.name().empty() ? std::string("W") : m.name()) +
                                                " has more than " + std::to_string(cap) + " elements or is infinite");
  };
  if (!table.run()) throw budget_error();
  const auto live = table.live_cosets();
  if (live.size() > cap) throw budget_error();

  // Breadth-first renumbering from the identity coset.
  std::vector<std::int32_t> number(live.empty() ? 0 : static_cast<std::size_t>(live.back()) + 1, -1);
  std::vector<std::int32_t> order;
  order.reserve(live.size());
  number[0] = 0;
  order.push_back(0);
  GroupTable t;
  t.matrix_ = m;
  t.size_ = live.size();
  t.length_.assign(live.size(), 0);
  t.parent_.assign(live.size(), 0);
  t.parent_gen_.assign(live.size(), -1);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto c = order[head];
    for (int x = 0; x < n; ++x) {
      const auto d = table.at(c, x);
      if (number[static_cast<std::size_t>(d)] != -1) continue;
      const auto id = static_cast<std::int32_t>(order.size());
      number[static_cast<std::size_t>(d)] = id;
      order.push_back(d);
      t.length_[static_cast<std::size_t>(id)] = t.length_[head] + 1;
      t.parent_[static_cast<std::size_t>(id)] = static_cast<Element>(head);
      t.parent_gen_[static_cast<std::size_t>(id)] = static_cast<std::int8_t>(x);
    }
  }
  if (order.size() != live.size())
    throw Error(ErrorKind::VerificationFailure, "coset table is not transitive from the identity");

  t.right_.assign(static_cast<std::size_t>(n), std::vector<kernels::Index>(t.size_));
  for (std::size_t w = 0; w < t.size_; ++w)
    for (int x = 0; x < n; ++x)
      t.right_[static_cast<std::size_t>(x)][w] =
          static_cast<kernels::Index>(number[static_cast<std::size_t>(table.at(order[w], x))]);

  // s_i (v s_g) = (s_i v) s_g along the breadth-first tree.
  t.left_.assign(static_cast<std::size_t>(n), std::vector<kernels::Index>(t.size_));
  for (int i = 0; i < n; ++i) {
    auto& left = t.left_[static_cast<std::size_t>(i)];
    left[0] = t.right_[static_cast<std::size_t>(i)][0];
    for (std::size_t w = 1; w < t.size_; ++w)
      left[w] = t.right_[static_cast<std::size_t>(t.parent_gen_[w])][left[t.parent_[w]]];
  }
  return t;
}

std::vector<int> GroupTable::word(Element w) const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length_[w]));
  for (Element v = w; v != identity(); v = parent_[v]) out.push_back(parent_gen_[v]);
  std::reverse(out.begin(), out.end());
  return out;
}

Element GroupTable::from_word(std::span<const int> letters) const {
  Element w = identity();
  for (int s : letters) {
    if (s < 0 || s >= rank())
      throw Error(ErrorKind::ParameterOutOfRange, "generator index " + std::to_string(s + 1) + " out of range");
    w = right(w, s);
  }
  return w;
}

Element GroupTable::multiply(Element a, Element b) const {
  const auto letters = word(b);
  for (int s : letters) a = right(a, s);
  return a;
}

Element GroupTable::inverse(Element w) const {
  auto letters = word(w);
  std::reverse(letters.begin(), letters.end());
  return from_word(letters);
}

std::size_t GroupTable::order(Element w) const {
  const auto letters = word(w);
  Element p = w;
  std::size_t k = 1;
  while (p != identity()) {
    for (int s : letters) p = right(p, s);
    ++k;
  }
  return k;
}

std::vector<kernels::Index> GroupTable::left_multiplication(Element w) const {
  std::vector<kernels::Index> cur(size_);
  const auto letters = word(w);
  if (letters.empty()) {
    for (std::size_t i = 0; i < size_; ++i) cur[i] = static_cast<kernels::Index>(i);
    return cur;
  }
  // w v = s_{a1}( s_{a2}( ... s_{ak}(v)))
  const auto& last = left_[static_cast<std::size_t>(letters.back())];
  std::copy(last.begin(), last.end(), cur.begin());
  std::vector<kernels::Index> tmp(size_);
  for (std::size_t j = letters.size() - 1; j-- > 0;) {
    kernels::compose(left_[static_cast<std::size_t>(letters[j])], cur, tmp);
    cur.swap(tmp);
  }
  return cur;
}

void GroupTable::verify() const {
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (!kernels::is_fixed_point_free_involution(right_[static_cast<std::size_t>(i)]))
      throw Error(ErrorKind::VerificationFailure,
                  "generator s" + std::to_string(i + 1) + " does not act as a fixed-point-free involution");
    if (!kernels::is_fixed_point_free_involution(left_[static_cast<std::size_t>(i)]))
      throw Error(ErrorKind::VerificationFailure,
                  "left action of s" + std::to_string(i + 1) + " is not a fixed-point-free involution");
  }
  std::vector<kernels::Index> a(size_), b(size_), tmp(size_);
  const auto alternating = [&](int first, int second, int len, std::vector<kernels::Index>& out) {
    const auto& r0 = right_[static_cast<std::size_t>(first)];
    std::copy(r0.begin(), r0.end(), out.begin());
    for (int k = 1; k < len; ++k) {
      kernels::compose(right_[static_cast<std::size_t>(k % 2 == 0 ? first : second)], out, tmp);
      out.swap(tmp);
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int mij = matrix_.m(i, j);
      alternating(i, j, mij, a);
      alternating(j, i, mij, b);
      if (!kernels::equal(a, b))
        throw Error(ErrorKind::VerificationFailure,
                    "braid relation of length " + std::to_string(mij) + " fails for s" + std::to_string(i + 1) +
                        ", s" + std::to_string(j + 1));
      // The product s_i s_j must have order exactly m_ij.
      Element p = identity();
      for (int k = 1; k < mij; ++k) {
        p = right(right(p, i), j);
        if (p == identity())
          throw Error(ErrorKind::VerificationFailure, "s" + std::to_string(i + 1) + " s" + std::to_string(j + 1) +
                                                          " has order " + std::to_string(k) + " < " +
                                                          std::to_string(mij));
      }
    }
  std::vector<bool> seen(size_, false);
  std::vector<Element> queue{identity()};
  seen[identity()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int i = 0; i < n; ++i) {
      const Element v = right(queue[head], i);
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  if (queue.size() != size_) throw Error(ErrorKind::VerificationFailure, "generator action is not transitive");
}

int length(const GroupTable& t, Element w) { return t.length(w); }

}  // namespace zigzag
