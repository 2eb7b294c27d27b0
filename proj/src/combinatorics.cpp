#include "polyspace/combinatorics.hpp"

#include "polyspace/errors.hpp"

namespace polyspace {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: out is C(n - k + i, i) here
  }
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer multinomial(std::span<const int> parts) {
  Integer out = 1;
  long running = 0;
  for (int p : parts) {
    if (p < 0) throw Error(ErrorKind::Range, "multinomial part is negative");
    running += p;
    out *= binomial(running, p);
  }
  return out;
}

}  // namespace polyspace
