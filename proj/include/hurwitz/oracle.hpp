#pragma once

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Largest degree and branch-point count the brute-force oracle accepts.
inline constexpr int kOracleMaxDegree = 5;
inline constexpr int kOracleMaxBranchPoints = 10;

bool oracle_within_bound(int g, int d);

/// H_{g,d} by direct enumeration of r-tuples of transpositions in S_d:
/// counts tuples with identity product whose transpositions connect all d
/// letters, divided by d!. Throws std::out_of_range beyond the bound.
Rational oracle_connected(int g, int d);

/// Count of transitive identity factorizations (the numerator above).
Integer oracle_transitive_count(int d, int r);

}  // namespace hurwitz
