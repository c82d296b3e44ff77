#ifndef SPECHTGB_COMBINATORICS_HPP
#define SPECHTGB_COMBINATORICS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace spechtgb {

// ---------------------------------------------------------------------------
// Partitions and dominance

/// A partition of n: a non-increasing sequence of positive integers.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("a partition needs at least one part");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be non-increasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  int n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }

  /// Column heights of the Young diagram (the conjugate partition).
  std::vector<int> column_heights() const {
    std::vector<int> h(parts_.empty() ? 0 : parts_.front(), 0);
    for (int row : parts_)
      for (int c = 0; c < row; ++c) ++h[c];
    return h;
  }

  /// `[4,1,1]`
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  /// `411` when every part is a single digit, else the bracket form.
  std::string to_compact_string() const {
    if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p > 9; })) return to_string();
    std::string s;
    for (int p : parts_) s += static_cast<char>('0' + p);
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in decreasing lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be positive");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// lambda ⊵ mu: every prefix sum of lambda is at least that of mu.
inline bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) throw std::invalid_argument("dominates: partitions of different n");
  int sl = 0, sm = 0;
  const std::size_t k = std::min(lambda.length(), mu.length());
  for (std::size_t i = 0; i < k; ++i) {
    sl += lambda[i];
    sm += mu[i];
    if (sl < sm) return false;
  }
  return true;
}

/// lambda + <k>: add a box to row k (1-based) and re-sort; a new row when
/// k exceeds the number of rows.
inline Partition add_box(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("add_box: k must be positive");
  std::vector<int> parts = lambda.parts();
  if (static_cast<std::size_t>(k) <= parts.size())
    ++parts[k - 1];
  else
    parts.push_back(1);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Filters

enum class FilterKind { lower, upper };

inline const char* to_string(FilterKind k) { return k == FilterKind::lower ? "lower" : "upper"; }

/// An explicit lower or upper filter of P_n. Members are kept in the
/// enumeration order of P_n and the closure property is checked on
/// construction.
class PartitionFilter {
public:
  PartitionFilter(int n, std::vector<Partition> members, FilterKind kind) : n_(n), kind_(kind) {
    if (n < 1) throw std::invalid_argument("filter: n must be positive");
    for (const auto& p : members)
      if (p.n() != n) throw std::invalid_argument("filter member " + p.to_string() + " is not a partition of " + std::to_string(n));
    std::sort(members.begin(), members.end(), std::greater<>());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
    for (const auto& lam : members_)
      for (const auto& mu : enumerate_partitions(n)) {
        bool needed = kind == FilterKind::lower ? dominates(lam, mu) : dominates(mu, lam);
        if (needed && !contains(mu))
          throw std::invalid_argument(std::string("not a ") + spechtgb::to_string(kind) + " filter: " +
                                      mu.to_string() + " missing");
      }
  }

  int n() const { return n_; }
  FilterKind kind() const { return kind_; }
  const std::vector<Partition>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Partition& p) const {
    return std::binary_search(members_.begin(), members_.end(), p, std::greater<>());
  }

  /// P_n minus this filter, revalidated as a filter of the opposite kind.
  PartitionFilter complement() const {
    std::vector<Partition> rest;
    for (auto& p : enumerate_partitions(n_))
      if (!contains(p)) rest.push_back(p);
    return PartitionFilter(n_, std::move(rest), kind_ == FilterKind::lower ? FilterKind::upper : FilterKind::lower);
  }

  /// `{411,33,42,51,6}`-style listing.
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) s += ',';
      s += members_[i].to_compact_string();
    }
    return s + "}";
  }

  friend bool operator==(const PartitionFilter&, const PartitionFilter&) = default;

private:
  int n_;
  std::vector<Partition> members_;
  FilterKind kind_;
};

/// Smallest filter of the given kind containing `generators`.
inline PartitionFilter filter_closure(int n, const std::vector<Partition>& generators, FilterKind kind) {
  std::vector<Partition> members;
  for (const auto& mu : enumerate_partitions(n))
    for (const auto& g : generators) {
      if (g.n() != n) throw std::invalid_argument("filter_closure: generator " + g.to_string() + " has wrong size");
      if (kind == FilterKind::lower ? dominates(g, mu) : dominates(mu, g)) {
        members.push_back(mu);
        break;
      }
    }
  return PartitionFilter(n, std::move(members), kind);
}

/// F_k = { mu in P_{n-1} : mu + <k> in F }, same kind as F.
inline PartitionFilter derived_filter(const PartitionFilter& f, int k) {
  if (f.n() < 2) throw std::invalid_argument("derived_filter: needs n >= 2");
  std::vector<Partition> members;
  for (const auto& mu : enumerate_partitions(f.n() - 1))
    if (f.contains(add_box(mu, k))) members.push_back(mu);
  return PartitionFilter(f.n() - 1, std::move(members), f.kind());
}

/// Every nonempty lower filter of P_n, found by deciding membership along
/// a linear extension of dominance (smallest first).
inline std::vector<PartitionFilter> enumerate_lower_filters(int n) {
  auto all = enumerate_partitions(n);
  std::reverse(all.begin(), all.end());  // increasing lex is a linear extension
  std::vector<std::vector<std::size_t>> below(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (dominates(all[i], all[j])) below[i].push_back(j);

  std::vector<PartitionFilter> out;
  std::vector<char> in(all.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == all.size()) {
      std::vector<Partition> members;
      for (std::size_t j = 0; j < all.size(); ++j)
        if (in[j]) members.push_back(all[j]);
      if (!members.empty()) out.emplace_back(n, std::move(members), FilterKind::lower);
      return;
    }
    in[i] = 0;
    rec(i + 1);
    if (std::all_of(below[i].begin(), below[i].end(), [&](std::size_t j) { return in[j] != 0; })) {
      in[i] = 1;
      rec(i + 1);
      in[i] = 0;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const PartitionFilter& a, const PartitionFilter& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.members() > b.members();
  });
  return out;
}

/// Every nonempty upper filter of P_n.
inline std::vector<PartitionFilter> enumerate_upper_filters(int n) {
  std::vector<PartitionFilter> out;
  for (const auto& lower : enumerate_lower_filters(n)) {
    if (lower.size() == enumerate_partitions(n).size()) continue;
    out.push_back(lower.complement());
  }
  out.push_back(PartitionFilter(n, enumerate_partitions(n), FilterKind::upper));
  std::sort(out.begin(), out.end(), [](const PartitionFilter& a, const PartitionFilter& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.members() > b.members();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Tableaux

enum class TableauMode { all, column_standard, standard };

/// A bijective filling of a Young diagram by 1..n, stored row by row.
class Tableau {
public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != shape_.length()) throw std::invalid_argument("tableau rows do not match shape");
    std::vector<char> seen(shape_.n() + 1, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].size() != static_cast<std::size_t>(shape_[r]))
        throw std::invalid_argument("tableau row length does not match shape");
      for (int v : rows_[r]) {
        if (v < 1 || v > shape_.n() || seen[v]) throw std::invalid_argument("tableau is not a bijective filling");
        seen[v] = 1;
      }
    }
  }

  /// Fill the diagram of `shape` row-major from `entries`.
  static Tableau from_row_major(const Partition& shape, std::span<const int> entries) {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (std::size_t r = 0; r < shape.length(); ++r) {
      if (pos + shape[r] > entries.size()) throw std::invalid_argument("too few tableau entries");
      rows.emplace_back(entries.begin() + pos, entries.begin() + pos + shape[r]);
      pos += shape[r];
    }
    if (pos != entries.size()) throw std::invalid_argument("too many tableau entries");
    return Tableau(shape, std::move(rows));
  }

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(std::size_t row, std::size_t col) const { return rows_[row][col]; }

  /// Entries of each column, top to bottom.
  std::vector<std::vector<int>> columns() const {
    std::vector<std::vector<int>> cols(shape_[0]);
    for (const auto& row : rows_)
      for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return cols;
  }

  /// 1-based row index of entry i (d_i).
  int row_of(int i) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (std::find(rows_[r].begin(), rows_[r].end(), i) != rows_[r].end()) return static_cast<int>(r) + 1;
    throw std::out_of_range("entry not in tableau");
  }

  bool is_column_standard() const {
    for (std::size_t r = 1; r < rows_.size(); ++r)
      for (std::size_t c = 0; c < rows_[r].size(); ++c)
        if (rows_[r][c] < rows_[r - 1][c]) return false;
    return true;
  }

  bool is_standard() const {
    if (!is_column_standard()) return false;
    for (const auto& row : rows_)
      if (!std::is_sorted(row.begin(), row.end())) return false;
    return true;
  }

  /// sigma·T: entry i becomes sigma[i-1].
  Tableau permuted(std::span<const int> sigma) const {
    auto rows = rows_;
    for (auto& row : rows)
      for (int& v : row) v = sigma[v - 1];
    return Tableau(shape_, std::move(rows));
  }

  std::vector<int> row_major() const {
    std::vector<int> out;
    for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r) s += '/';
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        if (c) s += ' ';
        s += std::to_string(rows_[r][c]);
      }
    }
    return s;
  }

  friend bool operator==(const Tableau&, const Tableau&) = default;

private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Tableaux of shape lambda in lexicographic order of their row-major
/// entry sequence.
inline std::vector<Tableau> enumerate_tableaux(const Partition& lambda, TableauMode mode) {
  std::vector<int> entries(lambda.n());
  std::iota(entries.begin(), entries.end(), 1);
  std::vector<Tableau> out;
  do {
    Tableau t = Tableau::from_row_major(lambda, entries);
    bool keep = mode == TableauMode::all || (mode == TableauMode::column_standard && t.is_column_standard()) ||
                (mode == TableauMode::standard && t.is_standard());
    if (keep) out.push_back(std::move(t));
  } while (std::next_permutation(entries.begin(), entries.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Orbit types and set partitions

/// Lambda(a): multiplicities of the distinct coordinate values, sorted
/// decreasingly.
template <class T>
Partition orbit_type(std::span<const T> point) {
  if (point.empty()) throw std::invalid_argument("orbit_type: empty point");
  std::vector<char> counted(point.size(), 0);
  std::vector<int> mult;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (counted[i]) continue;
    int m = 0;
    for (std::size_t j = i; j < point.size(); ++j)
      if (!counted[j] && point[j] == point[i]) {
        counted[j] = 1;
        ++m;
      }
    mult.push_back(m);
  }
  std::sort(mult.begin(), mult.end(), std::greater<>());
  return Partition(std::move(mult));
}

template <class T>
Partition orbit_type(const std::vector<T>& point) {
  return orbit_type(std::span<const T>(point));
}

/// A set partition of {1..n}. Blocks are sorted internally and ordered by
/// their smallest element.
class SetPartition {
public:
  SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    std::vector<char> seen(n + 1, 0);
    int count = 0;
    for (auto& b : blocks_) {
      if (b.empty()) throw std::invalid_argument("set partition has an empty block");
      std::sort(b.begin(), b.end());
      for (int v : b) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("set partition blocks overlap or leave range");
        seen[v] = 1;
        ++count;
      }
    }
    if (count != n) throw std::invalid_argument("set partition does not cover 1..n");
    std::sort(blocks_.begin(), blocks_.end());
  }

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  Partition type() const {
    std::vector<int> sizes;
    for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return Partition(std::move(sizes));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) s += '|';
      for (int v : blocks_[i]) s += std::to_string(v) + (n_ > 9 ? "," : "");
    }
    return s;
  }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// All set partitions of {1..n} whose block sizes form mu, in
/// lexicographic order of restricted growth strings.
inline std::vector<SetPartition> set_partitions_of_type(const Partition& mu) {
  const int n = mu.n();
  std::vector<SetPartition> out;
  std::vector<int> growth(n, 0);
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<int> sizes;
      for (auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
      std::sort(sizes.begin(), sizes.end(), std::greater<>());
      if (sizes == mu.parts()) out.emplace_back(n, blocks);
      return;
    }
    for (std::size_t b = 0; b <= blocks.size(); ++b) {
      if (b == blocks.size()) {
        if (static_cast<int>(blocks.size()) == static_cast<int>(mu.length())) break;
        blocks.push_back({i + 1});
        rec(i + 1);
        blocks.pop_back();
      } else {
        if (static_cast<int>(blocks[b].size()) >= mu[0]) continue;
        blocks[b].push_back(i + 1);
        rec(i + 1);
        blocks[b].pop_back();
      }
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// Text syntax

namespace detail {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (text.substr(pos, word.size()) == word) {
      pos += word.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos + 1); }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (start == pos) fail("expected an integer");
    if (pos - start > 9) {
      pos = start;
      fail("integer too large");
    }
    return std::stol(std::string(text.substr(start, pos - start)));
  }
};

inline Partition parse_partition_at(Cursor& cur) {
  std::size_t start = (cur.skip_ws(), cur.pos);
  std::vector<int> parts;
  if (cur.accept('[')) {
    do parts.push_back(static_cast<int>(cur.integer()));
    while (cur.accept(','));
    cur.expect(']');
  } else {
    while (cur.pos < cur.text.size() && cur.text[cur.pos] >= '0' && cur.text[cur.pos] <= '9')
      parts.push_back(cur.text[cur.pos++] - '0');
    if (parts.empty()) cur.fail("expected a partition");
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, start + 1);
  }
}

}  // namespace detail

/// `[4,1,1]` or the digit form `411`.
inline Partition parse_partition(std::string_view text) {
  detail::Cursor cur{text};
  Partition p = detail::parse_partition_at(cur);
  if (!cur.at_end()) cur.fail("trailing characters after partition");
  return p;
}

/// A parsed filter expression: an explicit member list, or the closure of
/// generators (`lower<=[3,2]`, `upper>=[2,1,1]`).
struct FilterExpr {
  enum class Form { list, lower_closure, upper_closure };
  Form form = Form::list;
  std::vector<Partition> partitions;

  /// Size n of the partitions; throws if the expression mixes sizes.
  int n() const {
    if (partitions.empty()) throw std::invalid_argument("empty filter expression");
    for (auto& p : partitions)
      if (p.n() != partitions.front().n()) throw std::invalid_argument("filter mixes partitions of different n");
    return partitions.front().n();
  }

  /// Materialize. Explicit lists are validated as filters of `list_kind`.
  PartitionFilter resolve(int n, FilterKind list_kind) const {
    if (n != this->n())
      throw std::invalid_argument("filter partitions have size " + std::to_string(this->n()) + ", expected " + std::to_string(n));
    switch (form) {
      case Form::lower_closure: return filter_closure(n, partitions, FilterKind::lower);
      case Form::upper_closure: return filter_closure(n, partitions, FilterKind::upper);
      case Form::list: break;
    }
    return PartitionFilter(n, partitions, list_kind);
  }
};

inline FilterExpr parse_filter(std::string_view text) {
  detail::Cursor cur{text};
  FilterExpr expr;
  if (cur.accept("lower")) {
    if (!cur.accept("<=")) cur.fail("expected '<=' after 'lower'");
    expr.form = FilterExpr::Form::lower_closure;
  } else if (cur.accept("upper")) {
    if (!cur.accept(">=")) cur.fail("expected '>=' after 'upper'");
    expr.form = FilterExpr::Form::upper_closure;
  }
  bool braces = cur.accept('{');
  do expr.partitions.push_back(detail::parse_partition_at(cur));
  while (cur.accept(','));
  if (braces) cur.expect('}');
  if (!cur.at_end()) cur.fail("unexpected character in filter");
  try {
    (void)expr.n();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return expr;
}

}  // namespace spechtgb

#endif  // SPECHTGB_COMBINATORICS_HPP
