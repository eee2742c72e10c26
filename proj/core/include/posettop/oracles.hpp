#pragma once

#include <map>
#include <set>
#include <vector>

#include "posettop/common.hpp"

namespace posettop {

// Weakly decreasing positive parts.
using IntegerPartition = std::vector<int>;

struct PartitionInfo {
  IntegerPartition conjugate;
  bool self_conjugate = false;
  int durfee_rank = 0;
  std::vector<int> alpha;  // Frobenius (alpha | beta)
  std::vector<int> beta;
  std::vector<std::vector<int>> hook_lengths;  // row by row
  Integer dim_specht;
};

bool is_partition(const IntegerPartition& lambda);
IntegerPartition conjugate(const IntegerPartition& lambda);
PartitionInfo partition_tools(const IntegerPartition& lambda);
// All partitions of n in reverse lexicographic order.
std::vector<IntegerPartition> partitions_of(int n);

// Sum of f^lambda over self-conjugate lambda |- n with rank n - 2k.
Integer bouc_betti(int n, int k);
// c_lambda from Frobenius notation.
Integer laplacian_eigenvalue(const IntegerPartition& lambda);
// {c_lambda : lambda in A_n}, A_n = {(alpha|beta) |- n : alpha_i >= beta_i}.
std::set<Integer> laplacian_eigenvalue_candidates(int n);

Integer factorial(long n);
Integer binomial(long n, long k);
Integer multinomial(const std::vector<long>& parts);
Integer double_factorial(long n);

Integer derangements(int n);            // recurrence d_n = (-1)^n + n d_{n-1}
Integer derangements_enumerated(int n);
Integer catalan(int n);                 // binom(2n, n) / (n + 1)
Integer catalan_recurrence(int n);
// Alternating permutations s1 < s2 > s3 < ... of [m].
Integer euler_alternating(int m);
// Coefficient of u^m/m! in tan u (m odd) or sec u (m even).
Integer euler_from_series(int m);
// |{s in S_n : des(s) = R}|, R subset of [n-1] (1-based positions).
Integer descent_class(int n, const std::set<int>& r);
// Same count by inclusion-exclusion over multinomials.
Integer descent_class_formula(int n, const std::set<int>& r);
// Sum of q^{inv(s)} over s in S_n with des(s) = R.
Integer descent_class_q(int n, const std::set<int>& r, long q);
// E^d_{dn-1} = descent_class(dn - 1, {d, 2d, ..., (n-1)d}).
Integer euler_d(int n, int d);
// Signed permutations of [n] (with s(0) = 0) whose descent set in {0..n-1} is R.
Integer signed_descent_class(int n, const std::set<int>& r);

// Number of k-dimensional subspaces of F_q^n.
Integer gaussian_binomial(long n, long k, long q);
// Reduced Betti numbers of the proper part of Pi_{n,k} by the broken skew hook count:
// dimension n - 3 - t(k - 2) collects compositions of n into t parts >= k.
std::map<long, Integer> kequal_betti(int n, int k);

}  // namespace posettop
