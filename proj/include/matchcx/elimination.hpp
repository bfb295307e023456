#pragma once

#include "matchcx/field.hpp"
#include "matchcx/integer.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace matchcx::detail {

struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("int64 overflow") {}
};

// Integer coefficients in int64 with overflow detection; pivots are units.
struct CheckedIntPolicy {
  using Value = std::int64_t;
  static bool is_zero(Value v) { return v == 0; }
  static bool is_pivot(Value v) { return v == 1 || v == -1; }
  static Value factor(Value a, Value p) { return a * p; }
  static Value sub_mul(Value x, Value f, Value y) {
    Value t, r;
    if (__builtin_mul_overflow(f, y, &t) || __builtin_sub_overflow(x, t, &r)) throw OverflowError();
    return r;
  }
  static Value from(const Integer& z) {
    if (!fits_int64(z)) throw OverflowError();
    return to_int64(z);
  }
  static Integer to_int(Value v) { return to_integer(v); }
};

struct BigIntPolicy {
  using Value = Integer;
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static bool is_pivot(const Value& v) { return v == 1 || v == -1; }
  static Value factor(const Value& a, const Value& p) { return a * p; }
  static Value sub_mul(const Value& x, const Value& f, const Value& y) { return x - f * y; }
  static Value from(const Integer& z) { return z; }
  static Integer to_int(const Value& v) { return v; }
};

template <class F>
struct FieldPolicy {
  using Value = typename F::Elem;
  F field;
  bool is_zero(const Value& v) const { return field.is_zero(v); }
  bool is_pivot(const Value& v) const { return !field.is_zero(v); }
  Value factor(const Value& a, const Value& p) const { return field.div(a, p); }
  Value sub_mul(const Value& x, const Value& f, const Value& y) const { return field.sub(x, field.mul(f, y)); }
  Value from(const Integer& z) const { return field.from_integer(z); }
};

// Sparse Gaussian elimination on rows. Columns at or beyond pivot_cols are
// passengers: they follow the row operations but are never pivots. Rows are
// picked shortest first and, within a row, the admissible entry whose column
// is sparsest.
template <class P>
class Eliminator {
 public:
  using V = typename P::Value;
  struct Row {
    std::vector<std::uint32_t> idx;
    std::vector<V> val;
  };

  Eliminator(P policy, std::size_t pivot_cols, std::vector<Row> rows)
      : p_(std::move(policy)), ncols_(pivot_cols), rows_(std::move(rows)) {}

  std::size_t run() {
    const std::size_t m = rows_.size();
    pivoted_.assign(m, 0);
    std::vector<std::uint32_t> version(m, 0);
    col_rows_.assign(ncols_, {});
    col_count_.assign(ncols_, 0);
    using Key = std::tuple<std::size_t, std::uint32_t, std::uint32_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> pq;
    for (std::uint32_t i = 0; i < m; ++i) {
      for (auto c : rows_[i].idx)
        if (c < ncols_) {
          col_rows_[c].push_back(i);
          ++col_count_[c];
        }
      if (pivotable_length(i)) pq.emplace(pivotable_length(i), i, 0);
    }
    std::size_t pivots = 0;
    Row scratch;
    std::vector<Key> held;
    while (!pq.empty()) {
      // Markowitz search over a few of the shortest live rows.
      held.clear();
      std::size_t best_cost = SIZE_MAX, best_k = 0;
      std::uint32_t best_row = 0;
      bool found = false;
      while (!pq.empty() && held.size() < kCandidates) {
        Key key = pq.top();
        pq.pop();
        auto [len, i, ver] = key;
        if (ver != version[i] || pivoted_[i]) continue;
        held.push_back(key);
        const Row& pr = rows_[i];
        for (std::size_t k = 0; k < pr.idx.size() && pr.idx[k] < ncols_; ++k) {
          if (!p_.is_pivot(pr.val[k])) continue;
          std::size_t cost = (len - 1) * (col_count_[pr.idx[k]] - 1);
          if (cost < best_cost) {
            best_cost = cost;
            best_k = k;
            best_row = i;
            found = true;
          }
        }
        if (found && best_cost == 0) break;
      }
      if (!found) continue;  // held rows have no admissible entry; they return when modified
      for (const auto& key : held)
        if (std::get<1>(key) != best_row) pq.push(key);
      const std::uint32_t i = best_row;
      const std::uint32_t c = rows_[i].idx[best_k];
      const V piv = rows_[i].val[best_k];
      pivoted_[i] = 1;
      ++pivots;
      for (auto cc : rows_[i].idx)
        if (cc < ncols_) --col_count_[cc];
      for (auto r : col_rows_[c]) {
        if (r == i || pivoted_[r]) continue;
        Row& tr = rows_[r];
        auto it = std::lower_bound(tr.idx.begin(), tr.idx.end(), c);
        if (it == tr.idx.end() || *it != c) continue;
        V f = p_.factor(tr.val[static_cast<std::size_t>(it - tr.idx.begin())], piv);
        merge(tr, rows_[i], f, scratch, r);
        std::swap(tr, scratch);
        ++version[r];
        if (pivotable_length(r)) pq.emplace(pivotable_length(r), r, version[r]);
      }
      std::vector<std::uint32_t>().swap(col_rows_[c]);
      keep_passengers(rows_[i]);
    }
    return pivots;
  }

  const std::vector<Row>& rows() const { return rows_; }

  // Passenger parts of pivot rows, indices shifted down by offset.
  template <class Conv>
  auto pivot_passengers(std::size_t offset, Conv conv) const {
    using Out = decltype(conv(std::declval<V>()));
    struct Item {
      std::size_t row;
      Out value;
    };
    std::vector<std::vector<Item>> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!pivoted_[i] || rows_[i].idx.empty()) continue;
      std::vector<Item> v;
      for (std::size_t k = 0; k < rows_[i].idx.size(); ++k) v.push_back({rows_[i].idx[k] - offset, conv(rows_[i].val[k])});
      out.push_back(std::move(v));
    }
    return out;
  }
  bool pivoted(std::size_t i) const { return pivoted_[i] != 0; }
  std::size_t pivotable_length(std::size_t i) const {
    const auto& idx = rows_[i].idx;
    return static_cast<std::size_t>(std::lower_bound(idx.begin(), idx.end(), static_cast<std::uint32_t>(ncols_)) - idx.begin());
  }

 private:
  // out = a - f * b
  void merge(const Row& a, const Row& b, const V& f, Row& out, std::uint32_t r) {
    out.idx.clear();
    out.val.clear();
    std::size_t x = 0, y = 0;
    while (x < a.idx.size() || y < b.idx.size()) {
      if (y == b.idx.size() || (x < a.idx.size() && a.idx[x] < b.idx[y])) {
        out.idx.push_back(a.idx[x]);
        out.val.push_back(a.val[x]);
        ++x;
      } else if (x == a.idx.size() || b.idx[y] < a.idx[x]) {
        V z = p_.sub_mul(V(0), f, b.val[y]);
        if (!p_.is_zero(z)) {
          out.idx.push_back(b.idx[y]);
          out.val.push_back(std::move(z));
          if (b.idx[y] < ncols_) {
            col_rows_[b.idx[y]].push_back(r);
            ++col_count_[b.idx[y]];
          }
        }
        ++y;
      } else {
        V z = p_.sub_mul(a.val[x], f, b.val[y]);
        if (!p_.is_zero(z)) {
          out.idx.push_back(a.idx[x]);
          out.val.push_back(std::move(z));
        } else if (a.idx[x] < ncols_) {
          --col_count_[a.idx[x]];
        }
        ++x;
        ++y;
      }
    }
  }

  void keep_passengers(Row& r) {
    auto cut = std::lower_bound(r.idx.begin(), r.idx.end(), static_cast<std::uint32_t>(ncols_)) - r.idx.begin();
    Row kept;
    kept.idx.assign(r.idx.begin() + cut, r.idx.end());
    kept.val.assign(r.val.begin() + cut, r.val.end());
    r = std::move(kept);
  }

  static constexpr std::size_t kCandidates = 4;

  P p_;
  std::size_t ncols_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::size_t> col_count_;
  std::vector<Row> rows_;
  std::vector<char> pivoted_;
};

}  // namespace matchcx::detail
