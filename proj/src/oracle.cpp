#include "mtlmon/oracle.hpp"

#include <memory>
#include <random>
#include <unordered_map>
#include <variant>

#include "mtlmon/errors.hpp"

namespace mtlmon {

AtomValuation bool_variable_valuation() {
  return [](const std::string& atom, const TimedState& state) {
    const Value* v = state.find(atom);
    if (v == nullptr || !std::holds_alternative<bool>(*v)) {
      throw UnboundPropositionError(atom);
    }
    return std::get<bool>(*v);
  };
}

namespace {

class OracleEval {
 public:
  OracleEval(const TimedStateSequence& rho, const AtomValuation& valuation)
      : rho_(rho), valuation_(valuation) {}

  bool eval(const Formula& f, std::size_t i) {
    // Memoized on (subterm identity, index); purely a cache, the clauses
    // below are evaluated verbatim.
    Key key{f.identity(), i, f.hash()};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool result = eval_uncached(f, i);
    memo_.emplace(key, result);
    return result;
  }

 private:
  struct Key {
    const void* node;
    std::size_t index;
    std::size_t hash;
    bool operator==(const Key& o) const {
      return node == o.node && index == o.index;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return k.hash ^ (k.index * 0x9e3779b97f4a7c15ULL);
    }
  };

  double tau(std::size_t i) const { return rho_.events()[i - 1].tau; }

  bool eval_uncached(const Formula& f, std::size_t i) {
    const std::size_t n = rho_.size();
    switch (f.kind()) {
      case FormulaKind::Atom:
        return valuation_(f.atom_name(), rho_.events()[i - 1]);
      case FormulaKind::And:
        for (const Formula& c : f.children()) {
          if (!eval(c, i)) return false;
        }
        return true;
      case FormulaKind::Xor: {
        bool odd = false;
        for (const Formula& c : f.children()) {
          if (eval(c, i)) odd = !odd;
        }
        return odd;
      }
      case FormulaKind::Next:
        return i < n && f.interval().contains(tau(i + 1) - tau(i)) &&
               eval(f.body(), i + 1);
      case FormulaKind::Until:
        for (std::size_t j = i; j <= n; ++j) {
          if (f.interval().contains(tau(j) - tau(i)) && eval(f.rhs(), j)) {
            bool lhs_holds = true;
            for (std::size_t k = i; k < j; ++k) {
              if (!eval(f.lhs(), k)) {
                lhs_holds = false;
                break;
              }
            }
            if (lhs_holds) return true;
          }
        }
        return false;
    }
    return false;  // unreachable
  }

  const TimedStateSequence& rho_;
  const AtomValuation& valuation_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

}  // namespace

bool oracle_evaluate(const TimedStateSequence& rho, std::size_t i,
                     const Formula& f, const AtomValuation& valuation) {
  if (i < 1 || i > rho.size()) {
    throw TraceIndexError("trace index " + std::to_string(i) +
                          " out of range 1.." + std::to_string(rho.size()));
  }
  return OracleEval(rho, valuation).eval(f, i);
}

namespace {

// rng() % n is used throughout: mt19937_64 output is standardized, so the
// generators are deterministic across platforms (library distributions are
// not).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Interval random_interval(std::mt19937_64& rng) {
  switch (draw(rng, 4)) {
    case 0:
      return Interval::zero_to_inf();
    case 1:
      return Interval::closed(0.0, 1.0 + static_cast<double>(draw(rng, 6)));
    case 2: {
      double l = static_cast<double>(draw(rng, 3));
      double u = l + 1.0 + static_cast<double>(draw(rng, 4));
      return Interval::make(l, false, u, true);
    }
    default: {
      double l = static_cast<double>(draw(rng, 3));
      double u = l + 1.0 + static_cast<double>(draw(rng, 4));
      return Interval::make(l, true, u, false);
    }
  }
}

Formula random_leaf(std::mt19937_64& rng,
                    const std::vector<std::string>& atoms) {
  // Mostly atoms, occasionally a constant.
  std::uint64_t pick = draw(rng, atoms.size() + 2);
  if (pick < atoms.size()) return Formula::atom(atoms[pick]);
  return pick == atoms.size() ? Formula::truth() : Formula::falsity();
}

enum class Ctor { Atom, And, Xor, Not, Or, Implies, Next, Until, Finally,
                  Globally };

Formula gen_formula(std::mt19937_64& rng, int depth,
                    const std::vector<std::string>& atoms, bool temporal) {
  if (depth <= 0) return random_leaf(rng, atoms);
  const Ctor ctor = static_cast<Ctor>(draw(rng, temporal ? 10 : 6));
  auto sub = [&] { return gen_formula(rng, depth - 1, atoms, temporal); };
  auto subs = [&](std::uint64_t max_n) {
    std::vector<Formula> fs;
    std::uint64_t n = draw(rng, max_n + 1);  // up to max_n children
    fs.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) fs.push_back(sub());
    return fs;
  };
  switch (ctor) {
    case Ctor::Atom:
      return random_leaf(rng, atoms);
    case Ctor::And:
      return Formula::and_of(subs(3));
    case Ctor::Xor:
      return Formula::xor_of(subs(3));
    case Ctor::Not:
      return make_not(sub());
    case Ctor::Or:
      return make_or(subs(3));
    case Ctor::Implies: {
      Formula a = sub();
      Formula b = sub();
      return make_implies(std::move(a), std::move(b));
    }
    case Ctor::Next:
      return Formula::next(random_interval(rng), sub());
    case Ctor::Until: {
      Interval iv = random_interval(rng);
      Formula a = sub();
      Formula b = sub();
      return Formula::until(iv, std::move(a), std::move(b));
    }
    case Ctor::Finally:
      return make_finally(random_interval(rng), sub());
    case Ctor::Globally:
      return make_globally(random_interval(rng), sub());
  }
  return Formula::truth();  // unreachable
}

}  // namespace

Formula random_formula(std::uint64_t seed, int max_depth,
                       const std::vector<std::string>& atom_names) {
  if (atom_names.empty()) throw Error("random_formula needs atom names");
  std::mt19937_64 rng(seed);
  return gen_formula(rng, max_depth, atom_names, true);
}

Formula random_propositional_formula(
    std::uint64_t seed, int max_depth,
    const std::vector<std::string>& atom_names) {
  if (atom_names.empty()) throw Error("random_formula needs atom names");
  std::mt19937_64 rng(seed);
  return gen_formula(rng, max_depth, atom_names, false);
}

TimedStateSequence random_trace(std::uint64_t seed, std::size_t length,
                                const std::vector<std::string>& atom_names) {
  if (length < 1) throw Error("random_trace length must be >= 1");
  std::mt19937_64 rng(seed);
  static const double kIncrements[] = {0.0, 0.5, 1.0, 2.0, 5.0};
  std::vector<ValueType> types(atom_names.size(), ValueType::Boolean);
  auto schema = std::make_shared<Schema>(atom_names, std::move(types));
  std::vector<TimedState> events;
  events.reserve(length);
  double t = 0.0;
  for (std::size_t i = 0; i < length; ++i) {
    if (i > 0) t += kIncrements[draw(rng, 5)];
    TimedState e;
    e.tau = t;
    e.schema = schema;
    e.values.reserve(atom_names.size());
    for (std::size_t v = 0; v < atom_names.size(); ++v) {
      e.values.push_back(Value(draw(rng, 2) == 1));
    }
    events.push_back(std::move(e));
  }
  return TimedStateSequence(std::move(schema), std::move(events));
}

}  // namespace mtlmon
