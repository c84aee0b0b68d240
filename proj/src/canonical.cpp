#include "mtlmon/canonical.hpp"

#include <algorithm>
#include <vector>

namespace mtlmon {

namespace {

// A monomial is a sorted set of distinct irreducible terms; empty = true.
// A polynomial is a sorted set of distinct monomials; empty = false.
using Monomial = std::vector<Formula>;
using Poly = std::vector<Monomial>;

int mono_compare(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (int c = compare(a[i], b[i]); c != 0) return c;
  }
  return 0;
}

bool mono_less(const Monomial& a, const Monomial& b) {
  return mono_compare(a, b) < 0;
}

// Symmetric difference: monomials appearing in both sides cancel (xor).
Poly poly_add(const Poly& a, const Poly& b) {
  Poly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = mono_compare(a[i], b[j]);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

// Set union of two sorted term lists; duplicate terms collapse (t & t = t).
Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i], b[j]);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i++]);
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const Monomial& ma : a) {
    Poly row;
    row.reserve(b.size());
    for (const Monomial& mb : b) row.push_back(mono_mul(ma, mb));
    std::sort(row.begin(), row.end(), mono_less);
    // Products that collide within one row cancel pairwise.
    Poly dedup;
    for (std::size_t i = 0; i < row.size();) {
      std::size_t j = i + 1;
      while (j < row.size() && mono_compare(row[i], row[j]) == 0) ++j;
      if ((j - i) % 2 == 1) dedup.push_back(std::move(row[i]));
      i = j;
    }
    out = poly_add(out, dedup);
  }
  return out;
}

Poly poly_one() { return Poly{Monomial{}}; }

Poly canon_poly(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return Poly{Monomial{f}};
    case FormulaKind::Next:
      return Poly{
          Monomial{Formula::next(f.interval(), canonicalize(f.body()))}};
    case FormulaKind::Until:
      return Poly{Monomial{Formula::until(
          f.interval(), canonicalize(f.lhs()), canonicalize(f.rhs()))}};
    case FormulaKind::And: {
      Poly acc = poly_one();
      for (const Formula& c : f.children()) {
        if (acc.empty()) break;  // f & false => false
        acc = poly_mul(acc, canon_poly(c));
      }
      return acc;
    }
    case FormulaKind::Xor: {
      Poly acc;
      for (const Formula& c : f.children()) acc = poly_add(acc, canon_poly(c));
      return acc;
    }
  }
  return {};
}

Formula mono_to_formula(const Monomial& m) {
  if (m.empty()) return Formula::truth();
  if (m.size() == 1) return m.front();
  return Formula::and_of(m);
}

Formula poly_to_formula(const Poly& p) {
  if (p.empty()) return Formula::falsity();
  if (p.size() == 1) return mono_to_formula(p.front());
  std::vector<Formula> parts;
  parts.reserve(p.size());
  for (const Monomial& m : p) parts.push_back(mono_to_formula(m));
  return Formula::xor_of(std::move(parts));
}

}  // namespace

Formula canonicalize(const Formula& f) { return poly_to_formula(canon_poly(f)); }

}  // namespace mtlmon
