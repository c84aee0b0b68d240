#pragma once

#include "mtlmon/formula.hpp"

namespace mtlmon {

/// Rewrites f into algebraic normal form: an exclusive-or of conjunctions
/// whose elements are irreducible terms (atoms and next/until with
/// canonicalized bodies). Applies, to fixpoint:
///
///   f & false => false     f & f => f      f & true => f
///   f xor false => f       f xor f => false
///   f1 & (f2 xor f3) => (f1 & f2) xor (f1 & f3)
///
/// with nested And-in-And / Xor-in-Xor flattened by set associativity.
/// Temporal subterms act as opaque variables of the Boolean algebra, so two
/// equivalent purely propositional formulas over the same atoms always
/// canonicalize to structurally equal results.
///
/// Implementation: a single bottom-up pass computing the polynomial over
/// GF(2) (xor = addition, and = multiplication, t*t = t), which terminates
/// without a fixpoint loop.
Formula canonicalize(const Formula& f);

}  // namespace mtlmon
