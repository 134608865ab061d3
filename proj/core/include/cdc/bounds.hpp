// Exact evaluators for the code-size bounds the CLI exposes.
//
// Everything here is closed-form arithmetic over arbitrary precision
// integers and rationals; no codes are constructed.  Each evaluator returns
// a BoundRecord carrying the parameters, the value, and whether the value
// came out of exact integer arithmetic (a few multilevel size formulas have
// rational summands that are floored term by term; those records have
// exact == false).

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdc {

// Thrown when a bound needs an externally supplied quantity (the --aq-term
// of the upper bound) that the caller did not provide.
struct MissingDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoundRecord {
    std::string theorem;  // CLI token, e.g. "parallel", "new-3", "cdc45"
    uint32_t q = 0;
    int n = 0, k = 0, delta = 0;
    mpz_class value;
    bool exact = true;
    std::string note;
};

// q^{(n-k)(k-delta+1)}, the size of a lifted MRD code.
mpz_class lifted_size(uint32_t q, int n, int k, int delta);

// Lifted MRD plus a rank-window code in the complementary block.
// Pre: n >= 2k > 2 delta > 0.
BoundRecord bound_parallel(uint32_t q, int n, int k, int delta);

// The ladder of pivot-shifted lifted codes plus the rank-window tail.
// Pre: n >= 2k + delta, k >= 2 delta.
BoundRecord bound_new3(uint32_t q, int n, int k, int delta);

// Rational summands of the distance-4, k >= 4 multilevel family size, one
// per admissible shift j.  Pre: n >= 2k + 2, k >= 4.
std::vector<mpq_class> stc4_m1_terms(uint32_t q, int n, int k);

// Sum of the floored summands; exact == false when any summand was
// fractional.
BoundRecord bound_stc4_m1(uint32_t q, int n, int k);

// bound_stc4_m1 plus the rank-window term.
BoundRecord bound_con4(uint32_t q, int n, int k);

// Size contribution M(x) of the distance-4, k = 5 multilevel family; exact
// rational with separate even/odd closed forms.  Pre: x >= 12.
mpq_class M_of_x(uint32_t q, int x);

// Sum of M(n - 5j) plus the terminal plane count q^4+q^3+q^2+q+1; always an
// integer (checked).  Pre: n >= 12.
BoundRecord bound_cdc45(uint32_t q, int n);

// Dimensions of the two candidate mixed-block fillers.
std::pair<long, long> l1_l2(int n, int k, int delta);

// Size of the four-part construction behind `construct --method new`.
// Pre: n >= 2k, k >= 2 delta.
BoundRecord bound_construction_new(uint32_t q, int n, int k, int delta);

// Closed form of bound_construction_new at n = 4 delta, k = 2 delta.
BoundRecord bound_cor2(uint32_t q, int delta);

// Upper bound for codes containing a lifted MRD subcode.  The aq argument
// is the maximum size A_q(n-k, 2(2 delta - k), delta) of a constant
// dimension code in the complementary block; it is required when
// k < 2 delta <= n - delta and defaults to 1 only in the n = 2k = 4 delta
// case.  Pre: delta <= k < 3 delta.
BoundRecord bound_upper_lifted(uint32_t q, int n, int k, int delta,
                               std::optional<mpz_class> aq = std::nullopt);

struct RatioRow {
    int delta = 0;
    mpz_class lower, upper;
    mpq_class ratio;
};

// cor2 over upper_lifted at (n, k) = (4 delta, 2 delta), exact.
mpq_class ratio_4delta(uint32_t q, int delta);
std::vector<RatioRow> ratio_table(uint32_t q, int delta_max);

// Recompute every value column of one of the three shipped parameter
// tables (1, 2 or 3).
std::vector<BoundRecord> table_generate(int table_id);

}  // namespace cdc
