#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flatperm/integer.hpp"
#include "flatperm/poly.hpp"

namespace flatperm {

/// A permutation of {1, ..., n} in one-line notation, n >= 1.
class Permutation {
 public:
  /// Throws std::invalid_argument unless letters is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> letters);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(letters_.size()); }
  /// 0-based position.
  int operator[](std::size_t i) const { return letters_[i]; }
  /// Image of `letter` under the permutation read as a function.
  int image(int letter) const { return letters_[static_cast<std::size_t>(letter - 1)]; }
  std::span<const int> letters() const { return letters_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> letters_;
};

/// Cycles each starting at their minimum, ordered by increasing minima.
class CycleForm {
 public:
  /// Throws std::invalid_argument when the cycles are not in standard form
  /// or do not partition {1, ..., n}.
  explicit CycleForm(std::vector<std::vector<int>> cycles);

  const std::vector<std::vector<int>>& cycles() const { return cycles_; }
  int size() const;
  Permutation to_permutation() const;

  friend bool operator==(const CycleForm&, const CycleForm&) = default;

 private:
  std::vector<std::vector<int>> cycles_;
};

/// "71564328" for n <= 9, otherwise comma separated.
std::string to_string(const Permutation& p);
/// "(172)(3546)(8)"
std::string to_string(const CycleForm& c);
/// Parses "71564328" or "7,1,5,6,4,3,2,8".
Permutation parse_permutation(const std::string& text);

CycleForm standard_cycle_form(const Permutation& p);
Permutation flatten(const Permutation& p);

/// Number of index pairs 2 <= i < j <= n with p_{i-1} < p_j < p_i.
long count_13_2(std::span<const int> word);
inline long count_13_2(const Permutation& p) { return count_13_2(p.letters()); }

/// Largest 13-2 count over flattened permutations of length n:
/// n(n-2)/4 for even n, (n-1)^2/4 for odd n.
long max_occurrences(int n);

// --- Exhaustive enumeration -------------------------------------------------

inline constexpr int kDefaultEnumerationLimit = 10;
inline constexpr int kMaxEnumerationLimit = 12;

struct EnumerationOptions {
  int limit = kDefaultEnumerationLimit;
  bool parallel = false;
};

/// Number of permutations of length n, by 13-2 count of their flattening,
/// optionally restricted to flattenings that begin with `prefix`.
struct OccurrenceTable {
  int n = 0;
  std::vector<int> prefix;
  std::map<long, Integer> counts;  // only nonzero entries

  Integer at(long r) const;
  Integer total() const;
  long max_r() const;
  /// sum_r counts[r] q^r
  QPoly as_poly() const;
};

/// Throws LimitExceeded if n > options.limit, std::invalid_argument for
/// n < 1, an invalid prefix, or options.limit > kMaxEnumerationLimit.
OccurrenceTable distribution(int n, std::span<const int> prefix = {}, const EnumerationOptions& options = {});

/// One pass over S_n producing distribution(n, {1, k}) for every
/// 2 <= k <= n, keyed by k. For n == 1 the map is empty.
std::map<int, OccurrenceTable> distributions_by_second_letter(int n, const EnumerationOptions& options = {});

// --- Explicit constructions -------------------------------------------------

/// The one-to-two correspondence: for sigma in S_{n-1}, pi = (1) followed by
/// the cycles of sigma shifted up by one, and pi' = the same with 1 inserted
/// at the front of the first shifted cycle.
std::pair<Permutation, Permutation> lemma21_pair(const Permutation& sigma);

/// 1, n, 2, n-1, 3, n-2, ...
Permutation max_pattern_perm(int n);

/// Smallest n with max_occurrences(n) >= r, for r >= 1.
int min_length_for(long r);

/// A flattened word of length r+2 beginning 1, i+2 with exactly r
/// occurrences of 13-2, for r >= 4 and 0 <= i <= r.
Permutation appendix_c_witness(int r, int i);

/// The permutation consisting of the single cycle (w_1 w_2 ... w_n); its
/// flattening is w whenever w begins with 1.
Permutation single_cycle_preimage(const Permutation& word);

}  // namespace flatperm
