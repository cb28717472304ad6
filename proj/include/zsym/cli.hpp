#pragma once

#include <iosfwd>
#include <string>

#include "zsym/types.hpp"

// Command-line front end. `run` is the whole program minus process exit so
// it can be driven in-process by tests.
namespace zsym::cli {

// Stable exit-code contract.
enum ExitCode : int {
  kVerified = 0,
  kClaimFailed = 1,
  kUsageError = 2,
  kNumericalFailure = 3,
};

int run(int argc, char const* const* argv, std::ostream& out,
        std::ostream& err);

// Parses "2", "-1.5e-3", "10i", "-i", "0.5+10i", "0.48-6.2898i".
// Throws DomainError on anything else.
ComplexValue parse_complex(std::string const& text);

// Fixed 17-significant-digit formatting used in every CSV and text output.
std::string format_double(double value);

}  // namespace zsym::cli
