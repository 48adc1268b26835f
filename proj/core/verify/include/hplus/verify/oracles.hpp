#pragma once

#include <span>
#include <vector>

#include "hplus/matrix.hpp"
#include "hplus/partition.hpp"
#include "hplus/rational.hpp"

// Reference computations that share no code path with the routines they
// check: plain enumeration over index tuples or group elements, explicit
// projections, and closed forms.
namespace hplus::oracle {

/// sum over i in {1..n}^k of delta_pi delta_qi, by visiting every tuple.
Rational brute_force_gram_entry(const SetPartition& p, const SetPartition& q, long n);

/// Entry (i, j) of the orthogonal projection onto span{v_p : p in basis},
/// v_p = sum_i delta_pi e_i, built by exact Gram-Schmidt in Q^{n^k}.
Rational projection_integral(const std::vector<SetPartition>& basis, std::span<const int> i,
                             std::span<const int> j, long n);

/// Average over the symmetric group S_n of prod_a [sigma(j_a) = i_a].
Rational symmetric_group_integral(std::span<const int> i, std::span<const int> j, int n);

/// Closed forms for the moments of order 2, 4, 6 of u_11 + ... + u_ss over H_n^+.
Rational hyperoctahedral_moment_closed_form(int k, long n, long s);

/// n * [[n,1,1],[1,n,1],[1,1,1]].
RationalMatrix reference_gram_4(long n);
/// 1/(n(n-1)) * [[1,0,-1],[0,1,-1],[-1,-1,n+1]].
RationalMatrix reference_weingarten_4(long n);
/// The published 12x12 Gram matrix at order 6 for H_n^+.
RationalMatrix reference_gram_6(long n);

/// C(2k, k)/(k + 1).
Rational catalan(int k);

/// sum over NC(k) partitions of prod_blocks kappa_{|block|}, by enumeration.
Rational moment_from_cumulants_by_enumeration(int k, std::span<const Rational> kappa);

}  // namespace hplus::oracle
