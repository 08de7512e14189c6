#include <composita/special_numbers.hpp>

#include <composita/error.hpp>

namespace composita {

namespace {
const Integer kZero{0};

std::vector<std::vector<Integer>> triangular_rows(int rows) {
  std::vector<std::vector<Integer>> t(static_cast<std::size_t>(rows) + 1);
  for (int n = 0; n <= rows; ++n)
    t[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Integer(0));
  return t;
}
}  // namespace

CombinatoricsCache::CombinatoricsCache(int max_n) : max_n_(max_n) {
  if (max_n < 0) throw gf_error(errc::invalid_parameter, "cache size must be >= 0");

  binom_ = triangular_rows(2 * max_n);
  binom_[0][0] = 1;
  for (int n = 1; n <= 2 * max_n; ++n) {
    auto& row = binom_[static_cast<std::size_t>(n)];
    const auto& prev = binom_[static_cast<std::size_t>(n) - 1];
    row[0] = 1;
    row[static_cast<std::size_t>(n)] = 1;
    for (int k = 1; k < n; ++k)
      row[static_cast<std::size_t>(k)] =
          prev[static_cast<std::size_t>(k) - 1] + prev[static_cast<std::size_t>(k)];
  }

  stirling2_ = triangular_rows(max_n);
  cycle_ = triangular_rows(max_n);
  stirling2_[0][0] = 1;
  cycle_[0][0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto& s_up = stirling2_[static_cast<std::size_t>(n) - 1];
      const auto& c_up = cycle_[static_cast<std::size_t>(n) - 1];
      const Integer& s_same = k <= n - 1 ? s_up[static_cast<std::size_t>(k)] : kZero;
      const Integer& c_same = k <= n - 1 ? c_up[static_cast<std::size_t>(k)] : kZero;
      stirling2_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          Integer(k) * s_same + s_up[static_cast<std::size_t>(k) - 1];
      cycle_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          Integer(n - 1) * c_same + c_up[static_cast<std::size_t>(k) - 1];
    }
  }
}

const Integer& CombinatoricsCache::binomial(int n, int k) const {
  if (n < 0 || k < 0 || k > n) return kZero;
  if (n > 2 * max_n_)
    throw gf_error(errc::row_out_of_range,
                   "binomial row " + std::to_string(n) + " exceeds cache limit " +
                       std::to_string(2 * max_n_));
  return binom_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const Integer& CombinatoricsCache::stirling2(int n, int k) const {
  if (n < 0 || k < 0) throw gf_error(errc::invalid_parameter, "stirling index must be >= 0");
  if (n > max_n_)
    throw gf_error(errc::row_out_of_range,
                   "stirling row " + std::to_string(n) + " exceeds cache limit " +
                       std::to_string(max_n_));
  if (k > n) return kZero;
  return stirling2_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const Integer& CombinatoricsCache::stirling1_unsigned(int n, int k) const {
  if (n < 0 || k < 0) throw gf_error(errc::invalid_parameter, "stirling index must be >= 0");
  if (n > max_n_)
    throw gf_error(errc::row_out_of_range,
                   "stirling row " + std::to_string(n) + " exceeds cache limit " +
                       std::to_string(max_n_));
  if (k > n) return kZero;
  return cycle_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer CombinatoricsCache::stirling1_signed(int n, int k) const {
  const Integer& c = stirling1_unsigned(n, k);
  return (n - k) % 2 == 0 ? c : -c;
}

Integer stirling2_by_sum(int n, int k) {
  if (n < 0 || k < 0) throw gf_error(errc::invalid_parameter, "stirling index must be >= 0");
  if (k > n) return 0;
  // j^n with the 0^0 = 1 convention so that {0, 0} = 1 falls out
  const auto power = [n](int j) -> Integer {
    if (j == 0) return n == 0 ? 1 : 0;
    return boost::multiprecision::pow(Integer(j), static_cast<unsigned>(n));
  };
  Integer binom = 1;  // C(k, j), updated multiplicatively
  Integer sum = 0;
  for (int j = 0; j <= k; ++j) {
    if (j > 0) binom = binom * (k - j + 1) / j;
    const Integer term = binom * power(j);
    sum += (k - j) % 2 == 0 ? term : -term;
  }
  const Integer kfact = factorial(k);
  // The alternating sum counts surjections onto a k-set, always a
  // multiple of k!.
  return sum / kfact;
}

}  // namespace composita
