#pragma once

#include <string>
#include <vector>

#include "lip/eaqecc.hpp"

namespace lip {

/// The worked [7,4,3]_2 / [7,3,4]_2 example: a Hamming generator, a
/// simplex generator and three permutation matrices that tune the
/// intersection dimension through 3, 2, 1, 0.
struct WorkedExample {
    Matrix g1;
    Matrix g2;
    std::vector<Matrix> monomials;          // A1, A2, A3
    std::vector<std::size_t> expected_ells; // base pair first, then per monomial
};

WorkedExample worked_example();

struct ExampleReport {
    std::vector<std::size_t> computed_ells;
    bool ok;
};

/// Recomputes the four intersection dimensions of the worked example and
/// compares with the expected values.
ExampleReport reproduce_example();

struct SuiteResult {
    std::string name;
    bool passed;
    std::string detail;
};

enum class SelfcheckProfile { Quick, Full };

/// Runs the per-module invariant suites at the chosen scale.
std::vector<SuiteResult> selfcheck(SelfcheckProfile profile);

/// True iff the coefficients are the canonical (lexicographically
/// smallest monic irreducible) modulus for GF(p^e).
bool is_canonical_modulus(std::uint32_t p, std::uint32_t e,
                          const std::vector<std::uint32_t>& coeffs);

} // namespace lip
