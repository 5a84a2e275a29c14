#pragma once

// The counting sequences: a(k) (involutions; |PB_n| = a(2n)) and
// mu(n,k,r,q), the number of PB-pairs of rank q whose join with the fixed
// pair (eps_{n,k},[r]) again has rank q. mu is evaluated top-down through
// a memo table on unbounded integers; mu_bruteforce recounts by exhaustive
// enumeration and is the oracle the recurrence is checked against.

#include <array>
#include <map>
#include <mutex>

#include <boost/multiprecision/cpp_int.hpp>

#include "pbm/enumeration.hpp"

namespace pbm {

using BigInt = boost::multiprecision::cpp_int;

/// a(0) = a(1) = 1, a(k) = a(k-1) + (k-1) a(k-2).
BigInt a_seq(int k);

/// |PB_n| = a(2n).
BigInt pb_count(int n);

BigInt binomial(int n, int k);

class MuTable {
 public:
  BigInt mu(int n, int k, int r, int q);

 private:
  std::map<std::array<int, 4>, BigInt> memo_;
  std::mutex mutex_;
};

/// mu via a process-wide shared table.
BigInt mu(int n, int k, int r, int q);

/// Count directly: enumerate all PB-pairs (eta, X) on [n] with |X| = q and
/// keep those whose join with (eps_{n,k},[r]) has rank q. Returns 0 when
/// the epsilon pair is undefined.
BigInt mu_bruteforce(int n, int k, int r, int q,
                     const EnumerationBounds& bounds = {});

/// Strict separation mu(n,k,r,q) > mu(n,k+2,r,q). Requires
/// n >= k+2, n >= k >= r >= q >= 1 and n = k (mod 2); in particular r = 0
/// is rejected (there the value does not depend on k at all).
bool check_mu_inequality(int n, int k, int r, int q);

}  // namespace pbm
