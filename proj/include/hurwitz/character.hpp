#pragma once

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Number of simple branch points of a connected genus-g degree-d cover of
/// the projective line: r = 2g - 2 + 2d.
int branch_point_count(int g, int d);

/// Number of r-tuples of transpositions in S_d whose product is the
/// identity, transitive or not. Computed as
/// (1/d!) * sum over partitions of dim^2 * content_sum^r.
/// Throws std::logic_error if the character sum is not integral.
Integer factorization_count(int d, int r);

/// factorization_count(d, r) / d!. Memoized; safe to call concurrently.
Rational disconnected_hurwitz(int d, int r);

/// Connected Hurwitz number H_{g,d}, extracted from the formal logarithm of
/// sum h°(a, k) p^a t^k / k!.
Rational connected_hurwitz(int g, int d);

}  // namespace hurwitz
