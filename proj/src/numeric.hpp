#ifndef CKA_NUMERIC_HPP
#define CKA_NUMERIC_HPP

#include <gmpxx.h>

#include <vector>

namespace cka {

using Int = mpz_class; // arbitrary-precision integer
using Rat = mpq_class; // exact rational, kept canonical (den > 0, reduced)

using RatVector = std::vector<Rat>;

inline Int rat_floor(const Rat &q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Int rat_ceil(const Rat &q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline bool rat_is_integer(const Rat &q) { return q.get_den() == 1; }

} // namespace cka

#endif
