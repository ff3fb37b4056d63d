#pragma once

// Command-line front end. run_cli is the whole program minus process I/O so
// tests can drive it directly.
//
//   sipoly count     --coeffs "1 -2.5 1" [--method krein] [--line]
//   sipoly interlace --g "1 0 1" --h "0-1i 0 0+1i" [--line]
//   sipoly form      --kind krein --coeffs "1 0 1"
//   sipoly inertia   --matrix "2 0; 0 2"  |  --kind K --coeffs C
//   sipoly roots     --coeffs "1 0 1" [--line]
//   sipoly verify    cohn --trials 100 --seed 7
//
// Common flags: --mode float|exact, --tol, --output json|text. KREIN_TOL in
// the environment sets the inertia zero threshold when --tol is absent.

#include <istream>
#include <string>
#include <vector>

namespace sipoly {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

struct CliOutput {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// `args` excludes the program name; `in` backs "--coeffs -".
CliOutput run_cli(const std::vector<std::string>& args, std::istream& in);

}  // namespace sipoly
