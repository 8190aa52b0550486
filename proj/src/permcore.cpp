#include "flatperm/permcore.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "flatperm/errors.hpp"

namespace flatperm {

Permutation::Permutation(std::vector<int> letters) : letters_(std::move(letters)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("Permutation: length must be at least 1");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : letters_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("Permutation: letters must be a rearrangement of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

CycleForm::CycleForm(std::vector<std::vector<int>> cycles) : cycles_(std::move(cycles)) {
  int n = 0;
  for (const auto& c : cycles_) n += static_cast<int>(c.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int previous_min = 0;
  for (const auto& c : cycles_) {
    if (c.empty()) throw std::invalid_argument("CycleForm: empty cycle");
    if (c.front() != *std::min_element(c.begin(), c.end())) {
      throw std::invalid_argument("CycleForm: cycle does not start with its minimum");
    }
    if (c.front() <= previous_min) throw std::invalid_argument("CycleForm: cycles not ordered by minima");
    previous_min = c.front();
    for (int x : c) {
      if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
        throw std::invalid_argument("CycleForm: cycles do not partition 1.." + std::to_string(n));
      }
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
}

int CycleForm::size() const {
  int n = 0;
  for (const auto& c : cycles_) n += static_cast<int>(c.size());
  return n;
}

Permutation CycleForm::to_permutation() const {
  std::vector<int> letters(static_cast<std::size_t>(size()));
  for (const auto& c : cycles_) {
    for (std::size_t i = 0; i < c.size(); ++i) letters[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()];
  }
  return Permutation(std::move(letters));
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  for (int i = 0; i < p.size(); ++i) {
    if (p.size() > 9 && i > 0) os << ',';
    os << p[static_cast<std::size_t>(i)];
  }
  return os.str();
}

std::string to_string(const CycleForm& c) {
  const bool wide = c.size() > 9;
  std::ostringstream os;
  for (const auto& cycle : c.cycles()) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (wide && i > 0) os << ',';
      os << cycle[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation parse_permutation(const std::string& text) {
  std::vector<int> letters;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        letters.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_permutation: bad letter '" + item + "'");
      }
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("parse_permutation: bad letter in '" + text + "'");
      letters.push_back(ch - '0');
    }
  }
  return Permutation(std::move(letters));
}

CycleForm standard_cycle_form(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = p.image(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  return CycleForm(std::move(cycles));
}

Permutation flatten(const Permutation& p) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(p.size()));
  const CycleForm form = standard_cycle_form(p);
  for (const auto& c : form.cycles()) word.insert(word.end(), c.begin(), c.end());
  return Permutation(std::move(word));
}

long count_13_2(std::span<const int> word) {
  long total = 0;
  const std::size_t n = word.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const int lo = word[i - 1];
    const int hi = word[i];
    if (lo >= hi) continue;
    for (std::size_t j = i + 1; j < n; ++j) total += (lo < word[j] && word[j] < hi) ? 1 : 0;
  }
  return total;
}

long max_occurrences(int n) {
  const long m = n;
  return (m % 2 == 0) ? m * (m - 2) / 4 : (m - 1) * (m - 1) / 4;
}

// --- Enumeration --------------------------------------------------------------

Integer OccurrenceTable::at(long r) const {
  auto it = counts.find(r);
  return it == counts.end() ? Integer(0) : it->second;
}

Integer OccurrenceTable::total() const {
  Integer t = 0;
  for (const auto& [r, c] : counts) t += c;
  return t;
}

long OccurrenceTable::max_r() const { return counts.empty() ? -1 : counts.rbegin()->first; }

QPoly OccurrenceTable::as_poly() const {
  std::vector<Integer> c(static_cast<std::size_t>(max_r() + 1));
  for (const auto& [r, v] : counts) c[static_cast<std::size_t>(r)] = v;
  return QPoly(std::move(c));
}

namespace {

constexpr int kBuf = kMaxEnumerationLimit + 1;

// tally[k][r]: flattenings with second letter k (0 when n == 1) and r occurrences.
using Tally = std::vector<std::vector<std::uint64_t>>;

Tally enumerate_with_first_letter(int n, int first, std::span<const int> prefix) {
  Tally tally(static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(max_occurrences(n)) + 1));
  std::array<int, kBuf> perm{};
  perm[0] = first;
  for (int i = 1, v = 1; i < n; ++v) {
    if (v != first) perm[static_cast<std::size_t>(i++)] = v;
  }
  std::array<int, kBuf> word{};
  do {
    // Flatten: walk cycles from each unvisited minimum.
    unsigned visited = 0;
    int len = 0;
    for (int start = 1; start <= n; ++start) {
      if (visited & (1U << start)) continue;
      for (int x = start; !(visited & (1U << x)); x = perm[static_cast<std::size_t>(x - 1)]) {
        visited |= 1U << x;
        word[static_cast<std::size_t>(len++)] = x;
      }
    }
    bool keep = true;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (word[i] != prefix[i]) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    const long r = count_13_2(std::span<const int>(word.data(), static_cast<std::size_t>(n)));
    const int key = n >= 2 ? word[1] : 0;
    ++tally[static_cast<std::size_t>(key)][static_cast<std::size_t>(r)];
  } while (std::next_permutation(perm.begin() + 1, perm.begin() + n));
  return tally;
}

Tally enumerate(int n, std::span<const int> prefix, const EnumerationOptions& options) {
  if (n < 1) throw std::invalid_argument("distribution: n must be at least 1");
  if (options.limit > kMaxEnumerationLimit) {
    throw std::invalid_argument("enumeration limit " + std::to_string(options.limit) + " exceeds the maximum " +
                                std::to_string(kMaxEnumerationLimit));
  }
  if (n > options.limit) {
    throw LimitExceeded("n = " + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(options.limit));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  if (prefix.size() > static_cast<std::size_t>(n)) throw std::invalid_argument("distribution: prefix longer than n");
  for (int a : prefix) {
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
      throw std::invalid_argument("distribution: prefix letters must be distinct and within 1..n");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }

  Tally total(static_cast<std::size_t>(n) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(max_occurrences(n)) + 1));
  auto merge = [&total](const Tally& t) {
    for (std::size_t k = 0; k < t.size(); ++k) {
      for (std::size_t r = 0; r < t[k].size(); ++r) total[k][r] += t[k][r];
    }
  };
  if (options.parallel && n >= 2) {
    std::vector<std::future<Tally>> parts;
    for (int first = 1; first <= n; ++first) {
      parts.push_back(std::async(std::launch::async, enumerate_with_first_letter, n, first, prefix));
    }
    for (auto& f : parts) merge(f.get());
  } else {
    for (int first = 1; first <= n; ++first) merge(enumerate_with_first_letter(n, first, prefix));
  }
  return total;
}

OccurrenceTable to_table(int n, std::vector<int> prefix, const std::vector<std::uint64_t>& by_r) {
  OccurrenceTable table{n, std::move(prefix), {}};
  for (std::size_t r = 0; r < by_r.size(); ++r) {
    if (by_r[r] != 0) table.counts[static_cast<long>(r)] = Integer(static_cast<unsigned long>(by_r[r]));
  }
  return table;
}

}  // namespace

OccurrenceTable distribution(int n, std::span<const int> prefix, const EnumerationOptions& options) {
  const Tally tally = enumerate(n, prefix, options);
  std::vector<std::uint64_t> by_r(tally.front().size());
  for (const auto& row : tally) {
    for (std::size_t r = 0; r < row.size(); ++r) by_r[r] += row[r];
  }
  return to_table(n, std::vector<int>(prefix.begin(), prefix.end()), by_r);
}

std::map<int, OccurrenceTable> distributions_by_second_letter(int n, const EnumerationOptions& options) {
  const Tally tally = enumerate(n, {}, options);
  std::map<int, OccurrenceTable> out;
  for (int k = 2; k <= n; ++k) out.emplace(k, to_table(n, {1, k}, tally[static_cast<std::size_t>(k)]));
  return out;
}

// --- Constructions ------------------------------------------------------------

std::pair<Permutation, Permutation> lemma21_pair(const Permutation& sigma) {
  std::vector<std::vector<int>> shifted = standard_cycle_form(sigma).cycles();
  for (auto& c : shifted) {
    for (int& x : c) ++x;
  }
  std::vector<std::vector<int>> with_fixed_one;
  with_fixed_one.push_back({1});
  with_fixed_one.insert(with_fixed_one.end(), shifted.begin(), shifted.end());

  std::vector<std::vector<int>> with_one_inserted = shifted;
  with_one_inserted.front().insert(with_one_inserted.front().begin(), 1);

  return {CycleForm(std::move(with_fixed_one)).to_permutation(),
          CycleForm(std::move(with_one_inserted)).to_permutation()};
}

Permutation max_pattern_perm(int n) {
  if (n < 1) throw std::invalid_argument("max_pattern_perm: n must be at least 1");
  std::vector<int> w;
  int lo = 1;
  int hi = n;
  while (lo <= hi) {
    w.push_back(lo++);
    if (lo <= hi) w.push_back(hi--);
  }
  return Permutation(std::move(w));
}

int min_length_for(long r) {
  if (r < 1) throw std::invalid_argument("min_length_for: r must be at least 1");
  int n = 1;
  while (max_occurrences(n) < r) ++n;
  return n;
}

Permutation appendix_c_witness(int r, int i) {
  if (r < 4) throw std::invalid_argument("appendix_c_witness: r must be at least 4");
  if (i < 0 || i > r) throw std::invalid_argument("appendix_c_witness: i must lie in [0, r]");
  std::vector<int> w{1, i + 2};
  if (i == r) {
    for (int x = r + 1; x >= 2; --x) w.push_back(x);
    return Permutation(std::move(w));
  }
  std::vector<int> rest;
  for (int x = 2; x <= r + 2; ++x) {
    if (x != i + 2) rest.push_back(x);
  }
  const int a = rest[0];
  const int b = rest[1];
  const int c = rest[2];
  for (auto it = rest.rbegin(); it != rest.rend() - 3; ++it) w.push_back(*it);
  w.insert(w.end(), {a, c, b});
  return Permutation(std::move(w));
}

Permutation single_cycle_preimage(const Permutation& word) {
  return CycleForm({std::vector<int>(word.letters().begin(), word.letters().end())}).to_permutation();
}

}  // namespace flatperm
