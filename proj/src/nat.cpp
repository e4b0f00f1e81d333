#include "kentucky/nat.hpp"

#include "kentucky/errors.hpp"

namespace kentucky {

Nat exact_quotient(const Nat& value, unsigned long divisor) {
    if (!mpz_divisible_ui_p(value.get_mpz_t(), divisor))
        throw invariant_error("exact_quotient: value is not divisible by " + std::to_string(divisor));
    Nat r;
    mpz_divexact_ui(r.get_mpz_t(), value.get_mpz_t(), divisor);
    return r;
}

}  // namespace kentucky
