#pragma once

#include <composita/rational.hpp>

#include <vector>

namespace composita {

inline int kronecker_delta(long n, long k) noexcept { return n == k ? 1 : 0; }

// Memoized binomial and Stirling tables.  A cache built for max_n serves
// binomial(n, k) for n up to 2*max_n (transform formulas index binomials
// near row 2n) and both Stirling kinds for n up to max_n.
class CombinatoricsCache {
 public:
  explicit CombinatoricsCache(int max_n);

  int max_n() const noexcept { return max_n_; }

  // C(n, k); 0 when k < 0 or k > n or n < 0.  n must be <= 2*max_n.
  const Integer& binomial(int n, int k) const;

  // Number of partitions of an n-set into k nonempty blocks; {0, 0} = 1.
  const Integer& stirling2(int n, int k) const;

  // Number of permutations of n elements with k cycles (unsigned kind).
  const Integer& stirling1_unsigned(int n, int k) const;

  // (-1)^(n-k) * stirling1_unsigned(n, k).
  Integer stirling1_signed(int n, int k) const;

 private:
  int max_n_;
  std::vector<std::vector<Integer>> binom_;      // rows 0..2*max_n
  std::vector<std::vector<Integer>> stirling2_;  // rows 0..max_n
  std::vector<std::vector<Integer>> cycle_;      // rows 0..max_n
};

// Independent cross-check for stirling2: the explicit alternating sum
// (1/k!) sum_{j=0..k} (-1)^(k-j) C(k, j) j^n evaluated directly.  Slower
// than the cached recurrence and used by tests to validate it.
Integer stirling2_by_sum(int n, int k);

}  // namespace composita
