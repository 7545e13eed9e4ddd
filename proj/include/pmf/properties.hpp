#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pmf {

struct PropertyResult {
    std::string name;
    size_t cases = 0;
    size_t failures = 0;
    std::string first_failure;
    bool ok() const { return cases > 0 && failures == 0; }
};

PropertyResult ring_axioms_suite(uint64_t seed, size_t cases = 200);
PropertyResult bsgs_brute_force_suite(uint64_t seed, size_t cases = 40);
PropertyResult normal_form_idempotence_suite(uint64_t seed, size_t cases = 1000);
// Hilbert functions through degree 6 from two graded orders and a lex basis,
// plus generator-order independence of the reduced basis
PropertyResult order_invariance_suite(uint64_t seed, size_t cases = 6);
// Hilbert functions over two primes, and dim R_k = dim I_k + dim (R/I)_k
PropertyResult multi_prime_suite(uint64_t seed, const std::vector<uint32_t>& primes, size_t cases = 6);

std::vector<PropertyResult> all_property_suites(uint64_t seed, const std::vector<uint32_t>& primes);

}  // namespace pmf
