#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Randomized property suites shared by the unit tests and the acceptance
// runner. Each returns the number of cases run and the failures seen.

namespace rothcoss::properties {

struct Outcome {
    std::size_t cases = 0;
    std::vector<std::string> failures;
    bool ok() const { return cases > 0 && failures.empty(); }
};

Outcome factorization_recomposition(std::size_t cases, std::uint64_t seed);
Outcome divisor_oracle(std::size_t cases, std::uint64_t seed);
Outcome cossic_round_trip(std::size_t cases, std::uint64_t seed);
Outcome radical_round_trip(std::size_t cases, std::uint64_t seed);
Outcome denest_squares(std::size_t cases, std::uint64_t seed);
/// Over every polynomial in the corpus file.
Outcome descartes_bound(const std::string& corpus_path);

}  // namespace rothcoss::properties
