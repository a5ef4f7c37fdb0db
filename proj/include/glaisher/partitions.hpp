#pragma once

// Combinatorial counters for the partition families A_m, B_m, B_m^(j), C_m, D_m.
//
// Everything here works on plain count tables and never touches the series
// module: these counters are the oracle side of every generating-function check.
// brute_force_count goes further and enumerates partitions one by one.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "glaisher/integer.hpp"

namespace glaisher {

enum class Family { A, B, Bj, C, D };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::Bj: return "Bj";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

inline std::optional<Family> parse_family(const std::string& s) {
  for (Family f : {Family::A, Family::B, Family::Bj, Family::C, Family::D}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

struct FamilySpec {
  Family family = Family::A;
  int m = 2;
  std::optional<int> j;  // required iff family == Bj

  void validate() const {
    if (m < 2) throw domain_error("family " + to_string(family) + ": m must be at least 2");
    if (family == Family::Bj) {
      if (!j) throw domain_error("family Bj requires j");
      if (*j < 1 || *j > m - 1) throw domain_error("family Bj: j must lie in [1, m-1]");
    } else if (j) {
      throw domain_error("j is only meaningful for family Bj");
    }
  }
};

struct CountTable {
  FamilySpec spec;
  std::int64_t n_max = 0;
  std::vector<Integer> counts;  // indexed 0..n_max
};

namespace detail {

using Table = std::vector<Integer>;

// Adds part p with multiplicity 0..max_mult to every partition in `ways`:
// new[k] = sum_{c=0}^{max_mult} old[k - c*p], via a sliding window per residue class.
inline void add_bounded_part(Table& ways, std::int64_t p, std::int64_t max_mult) {
  const auto size = static_cast<std::int64_t>(ways.size());
  const Table old = ways;
  for (std::int64_t r = 0; r < p && r < size; ++r) {
    Integer window = 0;
    for (std::int64_t k = r; k < size; k += p) {
      window += old[k];
      const std::int64_t drop = k - (max_mult + 1) * p;
      if (drop >= 0) window -= old[drop];
      ways[k] = window;
    }
  }
}

// Adds part p with unlimited multiplicity (coin-change step).
inline void add_free_part(Table& ways, std::int64_t p) {
  for (std::size_t k = static_cast<std::size_t>(p); k < ways.size(); ++k) ways[k] += ways[k - p];
}

// Partitions already allowing part p freely lose those that use p at least `mult`
// times; removing `mult` copies of p is a bijection onto partitions of k - mult*p.
inline void cap_part(Table& ways, std::int64_t p, std::int64_t mult) {
  const auto shift = static_cast<std::size_t>(p * mult);
  for (std::size_t k = ways.size(); k-- > shift;) ways[k] -= ways[k - shift];
}

inline Table unit_table(std::int64_t n_max) {
  Table t(static_cast<std::size_t>(n_max) + 1, Integer(0));
  t[0] = 1;
  return t;
}

inline Table bounded_mult_table(int m, std::int64_t n_max, std::int64_t min_part, std::optional<std::int64_t> max_part) {
  Table t = unit_table(n_max);
  const std::int64_t hi = max_part ? std::min(*max_part, n_max) : n_max;
  for (std::int64_t p = std::max<std::int64_t>(min_part, 1); p <= hi; ++p) add_bounded_part(t, p, m - 1);
  return t;
}

inline Table regular_table(int m, std::int64_t n_max) {
  Table t = unit_table(n_max);
  for (std::int64_t p = 1; p <= n_max; ++p) {
    if (p % m != 0) add_free_part(t, p);
  }
  return t;
}

// All B_m^(j) at once, indexed [j][n], j = 0..m-1 (j = 0 stays zero).
inline std::vector<Table> largest_residue_tables(int m, std::int64_t n_max) {
  std::vector<Table> out(static_cast<std::size_t>(m), Table(static_cast<std::size_t>(n_max) + 1, Integer(0)));
  Table upto = unit_table(n_max);  // m-regular partitions with parts <= L
  for (std::int64_t largest = 1; largest <= n_max; ++largest) {
    if (largest % m == 0) continue;
    add_free_part(upto, largest);
    auto& dst = out[static_cast<std::size_t>(largest % m)];
    for (std::int64_t n = largest; n <= n_max; ++n) dst[n] += upto[n - largest];
  }
  return out;
}

// C_m(n) = sum_j #(partitions of n - mj into parts <= mj, parts <= j used fewer than m times).
inline Table c_table(int m, std::int64_t n_max) {
  Table out(static_cast<std::size_t>(n_max) + 1, Integer(0));
  out[0] = 1;
  Table rest = unit_table(n_max);  // parts in [1, mj]; parts <= j capped
  std::int64_t top = 0;
  for (std::int64_t j = 1; static_cast<std::int64_t>(m) * j <= n_max; ++j) {
    for (std::int64_t p = top + 1; p <= m * j; ++p) add_free_part(rest, p);
    top = m * j;
    cap_part(rest, j, m);
    for (std::int64_t n = m * j; n <= n_max; ++n) out[n] += rest[n - m * j];
  }
  return out;
}

// D_m(n) = sum_{s >= 0} #(partitions of n - ms into parts >= s+1, each used fewer than m times).
inline Table d_table(int m, std::int64_t n_max) {
  Table out(static_cast<std::size_t>(n_max) + 1, Integer(0));
  const std::int64_t s_max = n_max / m;
  Table above = bounded_mult_table(m, n_max, s_max + 1, std::nullopt);
  for (std::int64_t s = s_max; s >= 0; --s) {
    for (std::int64_t n = m * s; n <= n_max; ++n) out[n] += above[n - m * s];
    if (s > 0) add_bounded_part(above, s, m - 1);
  }
  return out;
}

// Tables grow monotonically; a request past the end rebuilds with at least double the range.
class CountCache {
 public:
  const Table& get(Family family, int m, int j, std::int64_t n) {
    const Key key{static_cast<int>(family), m, j};
    auto it = tables_.find(key);
    if (it != tables_.end() && static_cast<std::int64_t>(it->second.size()) > n) return it->second;
    const std::int64_t old = it == tables_.end() ? 0 : static_cast<std::int64_t>(it->second.size());
    const std::int64_t n_max = std::max({n, 2 * old, std::int64_t{64}});
    switch (family) {
      case Family::A: tables_[key] = bounded_mult_table(m, n_max, 1, std::nullopt); break;
      case Family::B: tables_[key] = regular_table(m, n_max); break;
      case Family::C: tables_[key] = c_table(m, n_max); break;
      case Family::D: tables_[key] = d_table(m, n_max); break;
      case Family::Bj: {
        auto all = largest_residue_tables(m, n_max);
        for (int r = 1; r < m; ++r) tables_[Key{static_cast<int>(family), m, r}] = std::move(all[static_cast<std::size_t>(r)]);
        break;
      }
    }
    return tables_.at(key);
  }

 private:
  using Key = std::tuple<int, int, int>;
  std::map<Key, Table> tables_;
};

// Thread-confined: each worker thread owns its memo.
inline CountCache& thread_cache() {
  thread_local CountCache cache;
  return cache;
}

inline void check_m(int m) {
  if (m < 2) throw domain_error("m must be at least 2");
}

inline void check_n(std::int64_t n) {
  if (n < 0) throw domain_error("n must be non-negative");
}

}  // namespace detail

/// Partitions of n into parts in [min_part, max_part], each used at most m-1 times.
inline Integer count_bounded_mult(int m, std::int64_t n, std::int64_t min_part,
                                  std::optional<std::int64_t> max_part = std::nullopt) {
  detail::check_m(m);
  detail::check_n(n);
  if (min_part < 1) throw domain_error("count_bounded_mult: min_part must be at least 1");
  return detail::bounded_mult_table(m, n, min_part, max_part)[static_cast<std::size_t>(n)];
}

inline Integer count_A(int m, std::int64_t n) {
  detail::check_m(m);
  detail::check_n(n);
  return detail::thread_cache().get(Family::A, m, 0, n)[static_cast<std::size_t>(n)];
}

inline Integer count_B(int m, std::int64_t n) {
  detail::check_m(m);
  detail::check_n(n);
  return detail::thread_cache().get(Family::B, m, 0, n)[static_cast<std::size_t>(n)];
}

/// B_m^(j)(0) = 0: the empty partition has no largest part.
inline Integer count_Bj(int m, int j, std::int64_t n) {
  FamilySpec{Family::Bj, m, j}.validate();
  detail::check_n(n);
  return detail::thread_cache().get(Family::Bj, m, j, n)[static_cast<std::size_t>(n)];
}

inline Integer count_C(int m, std::int64_t n) {
  detail::check_m(m);
  detail::check_n(n);
  return detail::thread_cache().get(Family::C, m, 0, n)[static_cast<std::size_t>(n)];
}

inline Integer count_D(int m, std::int64_t n) {
  detail::check_m(m);
  detail::check_n(n);
  return detail::thread_cache().get(Family::D, m, 0, n)[static_cast<std::size_t>(n)];
}

inline CountTable count_table(const FamilySpec& spec, std::int64_t n_max) {
  spec.validate();
  detail::check_n(n_max);
  const auto& t = detail::thread_cache().get(spec.family, spec.m, spec.j.value_or(0), n_max);
  return CountTable{spec, n_max, std::vector<Integer>(t.begin(), t.begin() + n_max + 1)};
}

inline constexpr std::int64_t kBruteForceLimit = 40;

/// Counts by listing every partition of n and testing the family's defining property.
inline Integer brute_force_count(const FamilySpec& spec, std::int64_t n) {
  spec.validate();
  detail::check_n(n);
  if (n > kBruteForceLimit) {
    throw domain_error("brute_force_count: n = " + std::to_string(n) + " exceeds the enumeration guard of " +
                       std::to_string(kBruteForceLimit));
  }
  const int m = spec.m;

  // multiplicity map of one partition, keyed by part size (ascending)
  using Multiplicities = std::map<std::int64_t, std::int64_t>;
  auto all_below_m = [m](const Multiplicities& mult, std::int64_t skip) {
    for (const auto& [part, count] : mult) {
      if (part != skip && count >= m) return false;
    }
    return true;
  };

  auto accepts = [&](const Multiplicities& mult) -> int {
    const std::int64_t largest = mult.empty() ? 0 : mult.rbegin()->first;
    switch (spec.family) {
      case Family::A: return all_below_m(mult, -1) ? 1 : 0;
      case Family::B:
        return std::all_of(mult.begin(), mult.end(), [m](const auto& e) { return e.first % m != 0; }) ? 1 : 0;
      case Family::Bj:
        if (mult.empty()) return 0;
        for (const auto& e : mult) {
          if (e.first % m == 0) return 0;
        }
        return largest % m == *spec.j ? 1 : 0;
      case Family::C: {
        if (mult.empty()) return 1;  // C_m(0) := 1
        if (largest % m != 0) return 0;
        const std::int64_t j = largest / m;
        for (const auto& [part, count] : mult) {
          if (part <= j && count >= m) return 0;
        }
        return 1;
      }
      case Family::D: {
        // smallest part 0: exactly m zeros adjoined, every positive part used fewer than m times
        int hits = all_below_m(mult, -1) ? 1 : 0;
        // smallest part s >= 1 used exactly m times, every other part fewer than m times
        if (!mult.empty()) {
          const auto& [smallest, count] = *mult.begin();
          if (count == m && all_below_m(mult, smallest)) ++hits;
        }
        return hits;
      }
    }
    return 0;
  };

  // Enumerate partitions in decreasing canonical form.
  Integer total = 0;
  std::vector<std::int64_t> parts;
  std::function<void(std::int64_t, std::int64_t)> walk = [&](std::int64_t remaining, std::int64_t cap) {
    if (remaining == 0) {
      Multiplicities mult;
      for (auto p : parts) ++mult[p];
      total += accepts(mult);
      return;
    }
    for (std::int64_t p = std::min(remaining, cap); p >= 1; --p) {
      parts.push_back(p);
      walk(remaining - p, p);
      parts.pop_back();
    }
  };
  walk(n, n);
  return total;
}

}  // namespace glaisher
