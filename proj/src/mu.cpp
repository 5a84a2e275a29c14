#include "pbm/mu.hpp"

#include <sstream>
#include <vector>

namespace pbm {

BigInt a_seq(int k) {
  if (k < 0) throw ValidationError("a(k) needs k >= 0");
  static std::vector<BigInt> cache{1, 1};
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(cache.size()) <= k) {
    int m = static_cast<int>(cache.size());
    cache.push_back(cache[static_cast<size_t>(m - 1)] +
                    (m - 1) * cache[static_cast<size_t>(m - 2)]);
  }
  return cache[static_cast<size_t>(k)];
}

BigInt pb_count(int n) {
  if (n < 0) throw ValidationError("pb_count needs n >= 0");
  return a_seq(2 * n);
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt num = 1;
  for (int i = 1; i <= k; ++i) {
    num *= (n - k + i);
    num /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return num;
}

namespace {

// (2i-1)!! with the empty-product convention (-1)!! = 1.
BigInt odd_double_factorial(int i) {
  BigInt out = 1;
  for (int j = 3; j <= 2 * i - 1; j += 2) out *= j;
  return out;
}

bool valid_shape(int n, int k, int r) {
  return n >= 0 && k >= 0 && r >= 0 && n >= k && k >= r && (n - k) % 2 == 0;
}

}  // namespace

BigInt MuTable::mu(int n, int k, int r, int q) {
  if (q < 0) return 0;
  if (!valid_shape(n, k, r)) return 0;
  if (q == 0) {
    // all 1-2-partitions of [n]: choose the doubled points, then pair them
    BigInt total = 0;
    for (int i = 0; 2 * i <= n; ++i)
      total += binomial(n, 2 * i) * odd_double_factorial(i);
    return total;
  }
  if (r < q) return 0;
  std::array<int, 4> key{n, k, r, q};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  // here n >= k >= r >= q > 0 and n = k (mod 2)
  BigInt value = (n - k) * mu(n - 2, k, r, q) + mu(n - 1, k - 1, r - 1, q - 1) +
                 mu(n - 1, k - 1, r - 1, q) + (k - r) * mu(n - 2, k - 2, r - 1, q) +
                 (r - 1) * mu(n - 2, k - 2, r - 2, q);
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(key, value);
  return value;
}

BigInt mu(int n, int k, int r, int q) {
  static MuTable table;
  return table.mu(n, k, r, q);
}

BigInt mu_bruteforce(int n, int k, int r, int q, const EnumerationBounds& bounds) {
  if (!epsilon_pair_defined(n, k, r)) return 0;
  if (q < 0) return 0;
  PBPair fixed = epsilon_pair(n, k, r);
  long long count = 0;
  for_each_pb_pair(
      n,
      [&](const PBPair& candidate) {
        if (candidate.rank() != q) return;
        if (join(fixed, candidate).rank == q) ++count;
      },
      bounds);
  return count;
}

bool check_mu_inequality(int n, int k, int r, int q) {
  std::ostringstream os;
  os << "(" << n << "," << k << "," << r << "," << q << ")";
  if (r < 1 || q < 1)
    throw ValidationError("separation check needs r >= q >= 1, got " + os.str() +
                          " (the inequality fails for r = 0)");
  if (!(n >= k && k >= r && r >= q))
    throw ValidationError("separation check needs n >= k >= r >= q, got " + os.str());
  if ((n - k) % 2 != 0)
    throw ValidationError("separation check needs n = k (mod 2), got " + os.str());
  if (n < k + 2)
    throw ValidationError("separation check needs n >= k+2, got " + os.str());
  return mu(n, k, r, q) > mu(n, k + 2, r, q);
}

}  // namespace pbm
