#include "mtlmon/progression.hpp"

#include <vector>

#include "mtlmon/canonical.hpp"
#include "mtlmon/errors.hpp"

namespace mtlmon {

namespace {

Formula derive_raw(const Formula& f, const StepContext& ctx) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return ctx.atom_truth(f.atom_name()) ? Formula::truth()
                                           : Formula::falsity();
    case FormulaKind::And: {
      std::vector<Formula> parts;
      parts.reserve(f.children().size());
      for (const Formula& c : f.children()) parts.push_back(derive_raw(c, ctx));
      return Formula::and_of(std::move(parts));
    }
    case FormulaKind::Xor: {
      std::vector<Formula> parts;
      parts.reserve(f.children().size());
      for (const Formula& c : f.children()) parts.push_back(derive_raw(c, ctx));
      return Formula::xor_of(std::move(parts));
    }
    case FormulaKind::Next: {
      if (ctx.end_of_trace()) return Formula::falsity();
      double delta = *ctx.tau_next - ctx.tau;
      return f.interval().contains(delta) ? f.body() : Formula::falsity();
    }
    case FormulaKind::Until: {
      Formula first = f.interval().contains_zero() ? derive_raw(f.rhs(), ctx)
                                                   : Formula::falsity();
      Formula second = Formula::falsity();
      if (!ctx.end_of_trace()) {
        double delta = *ctx.tau_next - ctx.tau;
        second = Formula::and_of(
            {derive_raw(f.lhs(), ctx),
             Formula::until(f.interval().shifted(delta), f.lhs(), f.rhs())});
      }
      return make_or({std::move(first), std::move(second)});
    }
  }
  return Formula::falsity();  // unreachable
}

}  // namespace

Formula derive_step(const Formula& f, const StepContext& ctx) {
  if (ctx.tau_next && *ctx.tau_next < ctx.tau) {
    throw MonotonicityError("successor timestamp " +
                            format_number(*ctx.tau_next) +
                            " precedes event timestamp " +
                            format_number(ctx.tau));
  }
  return canonicalize(derive_raw(f, ctx));
}

Formula derive_final(const Formula& f, const StepContext& ctx) {
  if (!ctx.end_of_trace()) {
    throw Error("derive_final requires an end-of-trace context");
  }
  return derive_step(f, ctx);
}

}  // namespace mtlmon
