#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mtlmon/formula.hpp"
#include "mtlmon/trace.hpp"

namespace mtlmon {

/// Binds proposition names to their truth in a given state.
using AtomValuation =
    std::function<bool(const std::string& atom, const TimedState& state)>;

/// Valuation for traces whose variables are booleans named after the atoms
/// (random test traces). Throws UnboundPropositionError on a missing or
/// non-boolean variable.
AtomValuation bool_variable_valuation();

/// Brute-force satisfaction check (rho, i) |= f with 1-based index i.
/// Direct recursive enumeration of the satisfaction clauses; exponential and
/// intended as a test-only trust anchor, never as the monitoring path.
/// Finite-trace semantics are definitive: quantifiers range over i..|rho|.
bool oracle_evaluate(const TimedStateSequence& rho, std::size_t i,
                     const Formula& f, const AtomValuation& valuation);

/// Deterministic-in-seed random formula over the full operator inventory
/// {atom, and, xor, not, or, implies, next, until, finally, globally} with
/// intervals drawn from {[0,inf), [0,u], (l,u], [l,u)} for small integers.
Formula random_formula(std::uint64_t seed, int max_depth,
                       const std::vector<std::string>& atom_names);

/// Same, restricted to the propositional fragment {atom, and, xor, not, or,
/// implies}.
Formula random_propositional_formula(std::uint64_t seed, int max_depth,
                                     const std::vector<std::string>& atom_names);

/// Deterministic-in-seed random trace: one boolean variable per atom name,
/// timestamps starting at 0 with increments drawn from {0, 0.5, 1, 2, 5}.
TimedStateSequence random_trace(std::uint64_t seed, std::size_t length,
                                const std::vector<std::string>& atom_names);

}  // namespace mtlmon
