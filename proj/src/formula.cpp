#include "mtlmon/formula.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <utility>

#include "mtlmon/errors.hpp"

namespace mtlmon {

struct Formula::Node {
  FormulaKind kind;
  Interval interval;            // Next/Until
  std::string name;             // Atom
  std::vector<Formula> parts;   // And/Xor: sorted children; Next: {body};
                                // Until: {lhs, rhs} in order
  std::size_t hash = 0;
  std::size_t size = 1;
};

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t node_hash(FormulaKind kind, const Interval* iv,
                      const std::string& name,
                      const std::vector<Formula>& parts) {
  std::size_t h = combine(0x5851f42d4c957f2dULL, static_cast<std::size_t>(kind));
  if (iv != nullptr) h = combine(h, hash_value(*iv));
  if (!name.empty()) h = combine(h, std::hash<std::string>{}(name));
  for (const Formula& p : parts) h = combine(h, p.hash());
  return h;
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (name.empty()) throw Error("proposition name must be nonempty");
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Atom;
  node->name = std::move(name);
  node->hash = node_hash(node->kind, nullptr, node->name, {});
  node->size = 1;
  return Formula(std::move(node));
}

Formula Formula::and_of(std::vector<Formula> children) {
  std::stable_sort(children.begin(), children.end(), formula_less);
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::And;
  node->parts = std::move(children);
  node->hash = node_hash(node->kind, nullptr, {}, node->parts);
  node->size = 1;
  for (const Formula& c : node->parts) node->size += c.node_count();
  return Formula(std::move(node));
}

Formula Formula::xor_of(std::vector<Formula> children) {
  std::stable_sort(children.begin(), children.end(), formula_less);
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Xor;
  node->parts = std::move(children);
  node->hash = node_hash(node->kind, nullptr, {}, node->parts);
  node->size = 1;
  for (const Formula& c : node->parts) node->size += c.node_count();
  return Formula(std::move(node));
}

Formula Formula::next(const Interval& interval, Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Next;
  node->interval = interval;
  node->size = 1 + body.node_count();
  node->parts.push_back(std::move(body));
  node->hash = node_hash(node->kind, &node->interval, {}, node->parts);
  return Formula(std::move(node));
}

Formula Formula::until(const Interval& interval, Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Until;
  node->interval = interval;
  node->size = 1 + lhs.node_count() + rhs.node_count();
  node->parts.push_back(std::move(lhs));
  node->parts.push_back(std::move(rhs));
  node->hash = node_hash(node->kind, &node->interval, {}, node->parts);
  return Formula(std::move(node));
}

FormulaKind Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const { return node_->name; }

const std::vector<Formula>& Formula::children() const { return node_->parts; }

const Interval& Formula::interval() const { return node_->interval; }

const Formula& Formula::body() const { return node_->parts[0]; }

const Formula& Formula::lhs() const { return node_->parts[0]; }

const Formula& Formula::rhs() const { return node_->parts[1]; }

bool Formula::is_true() const {
  return node_->kind == FormulaKind::And && node_->parts.empty();
}

bool Formula::is_false() const {
  return node_->kind == FormulaKind::Xor && node_->parts.empty();
}

std::size_t Formula::hash() const { return node_->hash; }

std::size_t Formula::node_count() const { return node_->size; }

int compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  // Hash first: unequal hashes order arbitrarily but deterministically, and
  // full structural comparison resolves collisions, so compare(a,b)==0 holds
  // exactly for structurally equal formulas.
  if (a.hash() != b.hash()) return a.hash() < b.hash() ? -1 : 1;
  if (a.kind() != b.kind()) {
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  }
  switch (a.kind()) {
    case FormulaKind::Atom: {
      int c = a.atom_name().compare(b.atom_name());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case FormulaKind::Next:
    case FormulaKind::Until:
      if (int c = compare(a.interval(), b.interval()); c != 0) return c;
      break;
    case FormulaKind::And:
    case FormulaKind::Xor:
      break;
  }
  const auto& pa = a.node_->parts;
  const auto& pb = b.node_->parts;
  if (pa.size() != pb.size()) return pa.size() < pb.size() ? -1 : 1;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (int c = compare(pa[i], pb[i]); c != 0) return c;
  }
  return 0;
}

Formula make_not(Formula f) {
  return Formula::xor_of({Formula::truth(), std::move(f)});
}

Formula make_or(std::vector<Formula> fs) {
  for (Formula& f : fs) f = make_not(std::move(f));
  return make_not(Formula::and_of(std::move(fs)));
}

Formula make_implies(Formula a, Formula b) {
  return make_not(Formula::and_of({std::move(a), make_not(std::move(b))}));
}

Formula make_finally(const Interval& interval, Formula f) {
  return Formula::until(interval, Formula::truth(), std::move(f));
}

Formula make_globally(const Interval& interval, Formula f) {
  return make_not(make_finally(interval, make_not(std::move(f))));
}

Formula timed_trigger(const Interval& window, Formula trigger,
                      Formula response) {
  const Interval unbounded = Interval::zero_to_inf();
  Formula rising = Formula::and_of(
      {make_not(trigger), Formula::next(unbounded, trigger)});
  Formula obligation =
      Formula::next(unbounded, make_finally(window, std::move(response)));
  return make_globally(unbounded,
                       make_implies(std::move(rising), std::move(obligation)));
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      out.insert(f.atom_name());
      return;
    default:
      for (const Formula& c : f.children()) collect_atoms(c, out);
      return;
  }
}

namespace {

// Precedence used by the printer; must stay in sync with the spec-file
// grammar: primary(4) > X(3) > U(2) > &(1) > xor(0).
int print_prec(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return 4;
    case FormulaKind::Next:
      return 3;
    case FormulaKind::Until:
      return 2;
    case FormulaKind::And:
      return f.children().empty() ? 4 : 1;
    case FormulaKind::Xor:
      return f.children().empty() ? 4 : 0;
  }
  return 4;
}

std::string interval_suffix(const Interval& iv) {
  if (iv == Interval::zero_to_inf()) return "";
  return to_string(iv);
}

void print(const Formula& f, std::string& out, int min_prec) {
  const int prec = print_prec(f);
  const bool parens = prec < min_prec;
  if (parens) out += "(";
  switch (f.kind()) {
    case FormulaKind::Atom:
      out += f.atom_name();
      break;
    case FormulaKind::And:
      if (f.children().empty()) {
        out += "true";
      } else {
        bool first = true;
        for (const Formula& c : f.children()) {
          if (!first) out += " & ";
          first = false;
          print(c, out, 2);
        }
      }
      break;
    case FormulaKind::Xor:
      if (f.children().empty()) {
        out += "false";
      } else {
        bool first = true;
        for (const Formula& c : f.children()) {
          if (!first) out += " xor ";
          first = false;
          print(c, out, 1);
        }
      }
      break;
    case FormulaKind::Next:
      out += "X";
      out += interval_suffix(f.interval());
      out += " ";
      print(f.body(), out, 3);
      break;
    case FormulaKind::Until:
      print(f.lhs(), out, 3);
      out += " U";
      out += interval_suffix(f.interval());
      out += " ";
      print(f.rhs(), out, 2);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out, 0);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  return os << to_string(f);
}

}  // namespace mtlmon
