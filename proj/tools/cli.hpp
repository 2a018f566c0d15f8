#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobenius/bivariate.hpp"
#include "frobenius/int_polynomial.hpp"
#include "frobenius/truncated_series.hpp"

namespace frobenius::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kDomainError = 2, kParseError = 3 };

struct Environment {
  std::int64_t max_bound = 10'000'000;

  /// Reads SEMIGROUP_MAX_BOUND; unset leaves the default.
  static Environment from_process();
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

// JSON encodings shared with the tests.
nlohmann::json to_json(const Integer& v);
nlohmann::json to_json(const Rational& v);
nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json to_json(const BivariatePolynomial& p);
nlohmann::json to_json(const TruncatedSeries& s);

}  // namespace frobenius::cli
