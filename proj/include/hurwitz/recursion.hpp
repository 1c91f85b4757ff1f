#pragma once

#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// (2d-2)!/d! * d^(d-3), with d^(d-3) taken as a rational power for d <= 2.
Rational h0_closed(int d);

/// Genus 0, 1 and 2 recursions for H_{g,d} with base case H_{0,1} = 1.
Rational h0_recursion(int d);
Rational h1_recursion(int d);
Rational h2_recursion(int d);

/// Recursion values for degrees 1..d_max; index 0 is unused and holds 0.
std::vector<Rational> h0_recursion_sequence(int d_max);
std::vector<Rational> h1_recursion_sequence(int d_max);
std::vector<Rational> h2_recursion_sequence(int d_max);

/// Highest genus with a known recursion.
inline constexpr int kMaxRecursionGenus = 2;

}  // namespace hurwitz
