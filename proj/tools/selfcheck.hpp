#ifndef ELCKIT_TOOLS_SELFCHECK_HPP
#define ELCKIT_TOOLS_SELFCHECK_HPP

#include <cstdint>

/// Runs the built-in consistency suites: algebraic identities of LC/ELC on
/// random graphs, invariance properties, format round trips, and small
/// census values. Prints one PASS/FAIL line per suite; returns 0 when all
/// pass, 4 otherwise.
int cmd_selfcheck(int cases, std::uint64_t seed, int jobs);

#endif
