#include "flatperm/verify.hpp"

#include <cmath>
#include <functional>
#include <set>
#include <string>

#include "flatperm/errors.hpp"
#include "flatperm/genfun.hpp"
#include "flatperm/recurrence.hpp"
#include "flatperm/reference.hpp"

namespace flatperm::verify {

namespace {

using recurrence::GTable;

constexpr int kRecurrenceNMax = 30;
constexpr int kIdentityNMax = 12;
constexpr int kAverageNMax = 25;
constexpr int kClosedFormKMax = 15;
constexpr int kBijectionNMax = 6;
constexpr int kMaxPatternNMax = 50;
constexpr int kMinLengthRMax = 100;
constexpr int kRoundTripRMax = 4;
constexpr int kHtildeRMax = 6;
constexpr int kWitnessRMax = 12;

class Collector {
 public:
  /// Runs `body`, which returns an empty string on success or a failure
  /// description. Exceptions count as failures.
  void check(std::string claim, const std::function<std::string()>& body) {
    Check c{std::move(claim), false, {}};
    try {
      c.detail = body();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    checks_.push_back(std::move(c));
  }
  void append(std::vector<Check> more) { checks_.insert(checks_.end(), more.begin(), more.end()); }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

std::string at_n(int n) { return "n=" + std::to_string(n); }

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "sec2") return Suite::recurrences;
  if (name == "sec3") return Suite::generating_functions;
  if (name == "appendices") return Suite::consistency;
  return std::nullopt;
}

std::vector<Check> recurrence_checks(const Options& options) {
  Collector out;
  const GTable table(kRecurrenceNMax);

  out.check("g_1 = 1, g_2 = 2, g_3 = 4 + 2q, g_3(12) = 4, g_3(13) = 2q", [&]() -> std::string {
    if (table.g(1) != QPoly{1} || table.g(2) != QPoly{2} || table.g(3) != QPoly{4, 2}) return "g_n mismatch";
    if (table.g1k(3, 2) != QPoly{4} || table.g1k(3, 3) != QPoly{0, 2}) return "g_3(1k) mismatch";
    return {};
  });

  for (int n = 1; n <= options.oracle_n; ++n) {
    out.check("enumeration agrees with g_n and g_n(1k) for " + at_n(n), [&, n]() -> std::string {
      if (distribution(n, {}, options.enumeration).as_poly() != table.g(n)) return "g_n differs";
      for (const auto& [k, t] : distributions_by_second_letter(n, options.enumeration)) {
        if (t.as_poly() != table.g1k(n, k)) return "g_n(1" + std::to_string(k) + ") differs";
      }
      return {};
    });
  }

  out.check("g_n(1) = n!, coefficients nonnegative, sum_k g_n(1k) = g_n, g_n(12) = 2 g_{n-1} for n <= 30",
            [&]() -> std::string {
              for (int n = 1; n <= kRecurrenceNMax; ++n) {
                const QPoly& g = table.g(n);
                if (g.eval(Integer(1)) != factorial(n)) return "g_" + std::to_string(n) + "(1) != n!";
                for (const auto& c : g.coeffs()) {
                  if (c < 0) return "negative coefficient in g_" + std::to_string(n);
                }
                if (n < 2) continue;
                QPoly sum;
                for (int k = 2; k <= n; ++k) sum += table.g1k(n, k);
                if (sum != g) return "sum of g_n(1k) != g_n at " + at_n(n);
                if (table.g1k(n, 2) != QPoly{2} * table.g(n - 1)) return "g_n(12) != 2 g_{n-1} at " + at_n(n);
              }
              return {};
            });

  out.check("b_{n,j}: defining sum = division-free form, b_{n,1} = n, b_{n,n-1} = 2 for n <= 30", [&]() -> std::string {
    for (int n = 2; n <= kRecurrenceNMax; ++n) {
      if (recurrence::b_poly(n, 1) != QPoly::constant(n)) return "b_{n,1} != n";
      if (recurrence::b_poly(n, n - 1) != QPoly{2}) return "b_{n,n-1} != 2";
      for (int j = 1; j <= n - 1; ++j) {
        const QPoly b = recurrence::b_poly(n, j);
        if (b != recurrence::b_poly_by_definition(n, j) || (j >= 2 && b != recurrence::b_poly_integral_form(n, j))) {
          return "routes differ at n=" + std::to_string(n) + ", j=" + std::to_string(j);
        }
      }
    }
    return {};
  });

  out.check("initial forms of g_n(13), g_n(14) and the three-term recurrence of g_n(1k) for n <= 12",
            [&]() -> std::string {
              for (int n = 3; n <= kIdentityNMax; ++n) {
                if (table.g1k(n, 3) != recurrence::ini_g13_rhs(table, n)) return "g_n(13) at " + at_n(n);
                if (n >= 4 && table.g1k(n, 4) != recurrence::ini_g14_rhs(table, n)) return "g_n(14) at " + at_n(n);
                for (int k = 5; k <= n; ++k) {
                  if (table.g1k(n, k) != recurrence::rec_g1k_rhs(table, n, k)) return "g_n(1k) at " + at_n(n);
                }
              }
              return {};
            });

  out.check("g_n(1i) = g_{n-1} + sum_{j<i} (q^{i-j}-1) g_{n-1}(1j) for 3 <= i <= n <= 12", [&]() -> std::string {
    for (int n = 3; n <= kIdentityNMax; ++n) {
      for (int i = 3; i <= n; ++i) {
        if (table.g1k(n, i) != recurrence::rec_g1i_rhs(table, n, i)) return "fails at " + at_n(n) + ", i=" + std::to_string(i);
      }
    }
    return {};
  });

  out.check("g_{n,r}(1k) is even for r >= 1 (recurrence n <= 12, enumeration n <= oracle limit)", [&]() -> std::string {
    for (int n = 2; n <= kIdentityNMax; ++n) {
      for (int k = 2; k <= n; ++k) {
        const QPoly& p = table.g1k(n, k);
        for (int r = 1; r <= p.degree(); ++r) {
          if (p.coeff(r) % 2 != 0) return "odd coefficient in g_" + std::to_string(n) + "(1" + std::to_string(k) + ")";
        }
      }
    }
    for (int n = 2; n <= options.oracle_n; ++n) {
      for (const auto& [k, t] : distributions_by_second_letter(n, options.enumeration)) {
        for (const auto& [r, c] : t.counts) {
          if (r >= 1 && c % 2 != 0) return "odd enumeration count at " + at_n(n);
        }
      }
    }
    return {};
  });

  out.check("avoiders: q=0 recurrence gives 2^{n-1} for n <= 30 and matches enumeration", [&]() -> std::string {
    for (int n = 1; n <= kRecurrenceNMax; ++n) {
      if (recurrence::avoider_count(n) != pow2(n - 1)) return "mismatch at " + at_n(n);
    }
    for (int n = 1; n <= options.oracle_n; ++n) {
      if (distribution(n, {}, options.enumeration).at(0) != pow2(n - 1)) return "enumeration mismatch at " + at_n(n);
    }
    return {};
  });

  out.check("average = (n^2+3n+8)/12 - H_n for n <= 25", [&]() -> std::string {
    for (int n = 1; n <= kAverageNMax; ++n) {
      const QPoly& g = table.g(n);
      if (make_rational(g.derivative().eval(Integer(1)), factorial(n)) != recurrence::average_closed_form(n)) {
        return "mismatch at " + at_n(n);
      }
      recurrence::average_occurrences(n);
    }
    return {};
  });

  out.check("A(x,y) closed form reproduces a_{k,j} and b_{n,j} for k, n <= 15", [&]() -> std::string {
    const auto report = recurrence::verify_A_closed_form(kClosedFormKMax, kClosedFormKMax);
    return report.ok ? std::string{} : report.first_mismatch;
  });

  out.check("one-to-two correspondence onto flattenings starting 12, count preserved, for n <= 6",
            [&]() -> std::string {
              for (int n = 2; n <= std::min(kBijectionNMax, options.enumeration.limit); ++n) {
                std::set<Permutation> image;
                std::vector<int> letters(static_cast<std::size_t>(n - 1));
                for (int i = 0; i < n - 1; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
                do {
                  const Permutation sigma(letters);
                  const auto [pi, pi2] = lemma21_pair(sigma);
                  const Permutation f = flatten(pi);
                  if (pi == pi2 || f != flatten(pi2) || f[0] != 1 || f[1] != 2) return "bad pair at " + at_n(n);
                  if (count_13_2(f) != count_13_2(flatten(sigma))) return "count changed at " + at_n(n);
                  if (!image.insert(pi).second || !image.insert(pi2).second) return "not injective at " + at_n(n);
                } while (std::next_permutation(letters.begin(), letters.end()));
                if (Integer(static_cast<unsigned long>(image.size())) != distribution(n, std::vector<int>{1, 2}).total()) {
                  return "image does not cover all flattenings starting 12 at " + at_n(n);
                }
              }
              return {};
            });
  return out.take();
}

std::vector<Check> generating_function_checks(const Options& options) {
  Collector out;

  out.check("max_pattern_perm(n) has n(n-2)/4 or (n-1)^2/4 occurrences for n <= 50", []() -> std::string {
    for (int n = 1; n <= kMaxPatternNMax; ++n) {
      const long expected = n % 2 == 0 ? static_cast<long>(n) * (n - 2) / 4 : static_cast<long>(n - 1) * (n - 1) / 4;
      if (count_13_2(max_pattern_perm(n)) != expected) return "mismatch at " + at_n(n);
    }
    return {};
  });

  out.check("max_pattern_perm(n) is maximal over all flattenings (exhaustive)", [&]() -> std::string {
    for (int n = 1; n <= options.oracle_n; ++n) {
      if (distribution(n, {}, options.enumeration).max_r() != count_13_2(max_pattern_perm(n))) return "fails at " + at_n(n);
    }
    return {};
  });

  out.check("min_length_for(r) >= 1 + 2 sqrt(r) for r <= 100, and no shorter flattening has r occurrences",
            [&]() -> std::string {
              for (long r = 1; r <= kMinLengthRMax; ++r) {
                const int n = min_length_for(r);
                // n >= 1 + 2 sqrt(r)  <=>  (n-1)^2 >= 4r for n >= 1
                if (static_cast<long>(n - 1) * (n - 1) < 4 * r) return "bound fails at r=" + std::to_string(r);
              }
              for (int n = 1; n <= options.oracle_n; ++n) {
                for (const auto& [r, c] : distribution(n, {}, options.enumeration).counts) {
                  if (r >= 1 && n < min_length_for(r)) return "occurrence count too large at " + at_n(n);
                }
              }
              return {};
            });

  const int rmax = options.rmax;
  genfun::Pipeline pipeline(genfun::default_order(std::max(rmax, 1)), std::max(rmax, genfun::kDefaultRLimit));

  out.check("G_0 = 4x^3/(1-2x)", [&]() -> std::string {
    const VPoly& g0 = pipeline.g_series(0);
    for (int n = 0; n <= pipeline.order(); ++n) {
      const Integer expected = n < 3 ? Integer(0) : Integer(4) * pow2(n - 3);
      if (g0.degree() != 0 || g0.coeff(0).coeff(n) != expected) return "mismatch at x^" + std::to_string(n);
    }
    return {};
  });

  out.check("P_1 = 2 + (3-2x)(1-2x) v", [&]() -> std::string {
    return pipeline.p_poly(1) == XVPoly(std::vector<Poly>{Poly{2}, Poly{3, -8, 4}}) ? std::string{} : "mismatch";
  });

  for (int r = 1; r <= std::min(rmax, reference::kPublishedCTableMaxR); ++r) {
    out.check("c_{" + std::to_string(r) + ",l} equal the published table", [&, r]() -> std::string {
      const auto& c = pipeline.c_table(r).c;
      const auto published = reference::published_c_table(r);
      for (std::size_t l = 0; l < published.size(); ++l) {
        if (c.at(l) != published[l]) return "c_{r," + std::to_string(l) + "} = " + to_string(c.at(l), 'x');
      }
      return c.size() == published.size() ? std::string{} : "wrong number of polynomials";
    });
  }

  out.append(genfun::verify_theorem36(pipeline, rmax));

  for (int r = 0; r <= rmax; ++r) {
    out.check("r=" + std::to_string(r) + ": G_r starts at x^{r+3}, has v-degree r, and (r >= 1) only even coefficients",
              [&, r]() -> std::string {
                const VPoly& g = pipeline.g_series(r);
                if (g.degree() != r) return "v-degree " + std::to_string(g.degree());
                int valuation = pipeline.order() + 1;
                for (const auto& c : g.coeffs()) {
                  valuation = std::min(valuation, c.valuation());
                  if (r >= 1 && !c.all_coefficients_divisible_by(2)) return "odd coefficient";
                }
                if (valuation != r + 3) return "lowest x-power " + std::to_string(valuation);
                if (r >= 1 && pipeline.p_poly(r).degree_v() != r) return "deg_v P_r != r";
                return {};
              });
  }

  for (int r = 0; r <= std::min(rmax, kRoundTripRMax); ++r) {
    out.check("r=" + std::to_string(r) + ": rational form re-expands to G_r, which matches the g_n(1i) recurrence",
              [&, r]() -> std::string {
                const VPoly& g = pipeline.g_series(r);
                if (!(pipeline.rational_gf(r).expand(pipeline.order()) == g)) return "re-expansion differs";
                const GTable& t = pipeline.table();
                for (int n = 0; n <= pipeline.order(); ++n) {
                  for (int i = 2; i <= r + 2; ++i) {
                    const Integer expected = n >= r + 3 ? recurrence::coeff_g(t, n, r, i) : Integer(0);
                    if (g.coeff(i - 2).coeff(n) != expected) {
                      return "[x^" + std::to_string(n) + " v^" + std::to_string(i - 2) + "] differs";
                    }
                  }
                }
                return {};
              });
    out.check("r=" + std::to_string(r) + ": (1-v+vx) G_r equals the right side of its functional equation",
              [&, r]() -> std::string {
                const auto [lhs, rhs] = pipeline.rec_gr_sides(r);
                return lhs == rhs ? std::string{} : "sides differ";
              });
    out.check("r=" + std::to_string(r) + ": G_r(x,1) equals the kernel-substitution formula", [&, r]() -> std::string {
      return pipeline.g_series(r).at_one() == pipeline.g_at_one_via_kernel(r) ? std::string{} : "differs";
    });
  }
  return out.take();
}

std::vector<Check> consistency_checks(const Options& options) {
  Collector out;

  out.check("f_n = 2 f_{n-1} by enumeration, and the q=0 recurrence gives 2^{n-1}", [&]() -> std::string {
    Integer previous = 0;
    for (int n = 1; n <= options.oracle_n; ++n) {
      const Integer f = distribution(n, {}, options.enumeration).at(0);
      if (n >= 2 && f != 2 * previous) return "doubling fails at " + at_n(n);
      if (f != recurrence::avoider_count(n)) return "recurrence differs at " + at_n(n);
      previous = f;
    }
    return {};
  });

  for (int r = 0; r <= kHtildeRMax; ++r) {
    out.check("r=" + std::to_string(r) + ": both routes to H~_r/(1-sv) agree at order 4r+10", [r]() -> std::string {
      const auto data = genfun::boundary_data(r);
      const int order = genfun::default_order(r);
      return genfun::htilde_over_kernel_expanded(data, order) == genfun::htilde_over_kernel_direct(data, order)
                 ? std::string{}
                 : "routes differ";
    });
  }

  out.check("witnesses of length r+2 starting 1(i+2) have exactly r occurrences for 4 <= r <= 12",
            []() -> std::string {
              for (int r = 4; r <= kWitnessRMax; ++r) {
                for (int i = 0; i <= r; ++i) {
                  const Permutation w = appendix_c_witness(r, i);
                  if (w.size() != r + 2 || w[0] != 1 || w[1] != i + 2 || count_13_2(w) != r) {
                    return "fails at r=" + std::to_string(r) + ", i=" + std::to_string(i);
                  }
                  if (flatten(single_cycle_preimage(w)) != w) return "preimage does not flatten back";
                }
              }
              return {};
            });
  return out.take();
}

std::vector<Check> run(Suite suite, const Options& options) {
  std::vector<Check> all;
  auto add = [&all](std::vector<Check> part) { all.insert(all.end(), part.begin(), part.end()); };
  if (suite == Suite::all || suite == Suite::recurrences) add(recurrence_checks(options));
  if (suite == Suite::all || suite == Suite::generating_functions) add(generating_function_checks(options));
  if (suite == Suite::all || suite == Suite::consistency) add(consistency_checks(options));
  return all;
}

}  // namespace flatperm::verify
