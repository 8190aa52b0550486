#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "flatperm/check.hpp"
#include "flatperm/permcore.hpp"

namespace flatperm::verify {

enum class Suite { all, recurrences, generating_functions, consistency };

/// Accepts the command-line names all, sec2, sec3 and appendices.

std::optional<Suite> parse_suite(std::string_view name);

struct Options {
  /// Largest n enumerated by brute force.
  int oracle_n = 9;
  /// Largest r pushed through the generating-function pipeline.
  int rmax = 5;
  EnumerationOptions enumeration{};
};

/// Recurrences for g_n and g_n(1k), their agreement with enumeration,
/// the one-to-two correspondence, parity, avoiders, the average and the
/// closed form of A(x,y).
std::vector<Check> recurrence_checks(const Options& options);
/// Maximal occurrence counts, the kernel-method pipeline, P_r and c_{r,l},
/// and the rational form of G_r.
std::vector<Check> generating_function_checks(const Options& options);
/// Avoider doubling, the two routes to H~_r/(1-sv), and the explicit
/// witnesses with r occurrences.
std::vector<Check> consistency_checks(const Options& options);

std::vector<Check> run(Suite suite, const Options& options);

}  // namespace flatperm::verify
