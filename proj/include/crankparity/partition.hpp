#pragma once

// Brute-force partition enumeration and the statistics evaluated on single
// partitions: crank, rank, the distinct-parts crank and the initial-run
// weights. Everything here is the ground truth the series code is checked
// against, so it stays deliberately literal.

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "crankparity/error.hpp"

namespace crankparity {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }

  bool is_distinct() const {
    for (std::size_t i = 1; i < parts.size(); ++i)
      if (parts[i] == parts[i - 1]) return false;
    return true;
  }

  int multiplicity(int size) const {
    int m = 0;
    for (int p : parts) m += (p == size);
    return m;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct ParityCount {
  std::int64_t even = 0;
  std::int64_t odd = 0;

  std::int64_t difference() const { return even - odd; }
  std::int64_t total() const { return even + odd; }

  void add(long statistic) {
    if (statistic % 2 == 0)
      ++even;
    else
      ++odd;
  }
};

inline void require_nonempty(const Partition& p) {
  if (p.empty()) throw Error(ErrorKind::undefined_statistic, "statistic of the empty partition");
}

/// Andrews-Garvan crank: the largest part when there are no ones, otherwise
/// (#parts larger than the number of ones) - (number of ones).
inline int crank(const Partition& p) {
  require_nonempty(p);
  const int ones = p.multiplicity(1);
  if (ones == 0) return p.parts.front();
  int larger = 0;
  for (int part : p.parts) larger += (part > ones);
  return larger - ones;
}

/// Dyson rank: largest part minus number of parts.
inline int rank(const Partition& p) {
  require_nonempty(p);
  return p.parts.front() - p.length();
}

/// Crank restricted to distinct parts: largest part without a one, otherwise
/// number of parts minus two.
inline int distinct_crank(const Partition& p) {
  require_nonempty(p);
  if (!p.is_distinct()) throw Error(ErrorKind::not_distinct, "partition has repeated parts");
  return p.parts.back() == 1 ? p.length() - 2 : p.parts.front();
}

/// Length m of the initial run 1, 2, ..., m of part sizes all present.
inline int initial_run_length(const Partition& p) {
  // parts are decreasing, so walk from the back
  int m = 0;
  for (auto it = p.parts.rbegin(); it != p.parts.rend(); ++it) {
    if (*it == m) continue;
    if (*it == m + 1)
      ++m;
    else
      break;
  }
  return m;
}

/// 1 + 4 * sum of (-1)^j over run members j of odd multiplicity.
inline int weight_omega(const Partition& p) {
  require_nonempty(p);
  const int run = initial_run_length(p);
  int w = 1;
  for (int j = 1; j <= run; ++j)
    if (p.multiplicity(j) % 2 == 1) w += (j % 2 == 0) ? 4 : -4;
  return w;
}

/// (-1)^run - 2 * sum over run members j of (-1)^j (-1)^mult(j).
inline int weight_omega1(const Partition& p) {
  require_nonempty(p);
  const int run = initial_run_length(p);
  int w = (run % 2 == 0) ? 1 : -1;
  for (int j = 1; j <= run; ++j) {
    const int sj = (j % 2 == 0) ? 1 : -1;
    const int sm = (p.multiplicity(j) % 2 == 0) ? 1 : -1;
    w -= 2 * sj * sm;
  }
  return w;
}

/// Streams the partitions of n (or those with distinct parts) in reverse
/// lexicographic order: (n) first. n = 0 yields the empty partition once.
class PartitionStream {
 public:
  PartitionStream(int n, bool distinct) : n_(n), distinct_(distinct) {
    if (n < 0) throw Error(ErrorKind::invalid_input, "cannot partition a negative integer");
  }

  /// Advances to the next partition; false once the stream is exhausted.
  bool next() {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      if (n_ > 0) current_.parts = {n_};
      return true;
    }
    const bool more = distinct_ ? advance_distinct() : advance_all();
    if (!more) done_ = true;
    return more;
  }

  const Partition& current() const { return current_; }

 private:
  bool advance_all() {
    auto& a = current_.parts;
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return false;
    const int v = --a.back();
    int rest = ones + 1;
    while (rest > 0) {
      const int take = rest < v ? rest : v;
      a.push_back(take);
      rest -= take;
    }
    return true;
  }

  bool advance_distinct() {
    auto& a = current_.parts;
    int tail = 0;  // sum of parts after index i
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
      const int reduced = a[static_cast<std::size_t>(i)] - 1;
      const long rest = tail + 1;
      const long room = static_cast<long>(reduced - 1) * reduced / 2;  // 1 + ... + (reduced-1)
      if (reduced >= 1 && rest <= room) {
        a.resize(static_cast<std::size_t>(i));
        a.push_back(reduced);
        long left = rest;
        int cap = reduced - 1;
        while (left > 0) {
          const int take = left < cap ? static_cast<int>(left) : cap;
          a.push_back(take);
          left -= take;
          cap = take - 1;
        }
        return true;
      }
      tail += a[static_cast<std::size_t>(i)];
    }
    return false;
  }

  int n_;
  bool distinct_;
  bool started_ = false;
  bool done_ = false;
  Partition current_;
};

template <class Fn>
void for_each_partition(int n, bool distinct, Fn&& fn) {
  PartitionStream s(n, distinct);
  while (s.next()) fn(s.current());
}

inline std::int64_t count_partitions(int n, bool distinct) {
  std::int64_t c = 0;
  for_each_partition(n, distinct, [&](const Partition&) { ++c; });
  return c;
}

enum class Statistic { crank, rank, distinct_crank };

inline ParityCount parity_count(int n, bool distinct, Statistic stat) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "parity counts need n >= 1");
  ParityCount count;
  for_each_partition(n, distinct, [&](const Partition& p) {
    switch (stat) {
      case Statistic::crank: count.add(crank(p)); break;
      case Statistic::rank: count.add(rank(p)); break;
      case Statistic::distinct_crank: count.add(distinct_crank(p)); break;
    }
  });
  return count;
}

/// M_e(n) - M_o(n) counted over partitions. At n = 1 this is -1, while the
/// generating-function coefficient is -3.
inline std::int64_t crank_parity_oracle(int n) {
  return parity_count(n, false, Statistic::crank).difference();
}

inline std::int64_t rank_parity_oracle(int n) {
  return parity_count(n, false, Statistic::rank).difference();
}

inline std::int64_t distinct_crank_parity_oracle(int n) {
  return parity_count(n, true, Statistic::distinct_crank).difference();
}

inline std::int64_t distinct_rank_parity_oracle(int n) {
  return parity_count(n, true, Statistic::rank).difference();
}

/// Sum of weight_omega over all partitions of n.
inline std::int64_t weighted_count(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "weighted count needs n >= 1");
  std::int64_t s = 0;
  for_each_partition(n, false, [&](const Partition& p) { s += weight_omega(p); });
  return s;
}

}  // namespace crankparity
