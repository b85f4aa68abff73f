#pragma once

// Reference implementations used only by the tests. They work on explicit
// rank vectors and pairwise relations rather than on the library's cell lists,
// so agreement with the library is evidence rather than tautology.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "tqbc/change.hpp"
#include "tqbc/logic.hpp"
#include "tqbc/tpo.hpp"

namespace oracle {

using Keys = std::vector<std::uint32_t>;  // plausibility key per world; lower is more plausible

/// x ⪯ y as an explicit relation.
using Relation = std::function<bool(std::size_t, std::size_t)>;

inline Keys keys_of(const tqbc::Tpo& t) {
  Keys k(t.world_count());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = t.rank(tqbc::World{static_cast<std::uint32_t>(i)}).value;
  return k;
}

/// Builds the tpo for a total preorder given as a relation: the key of x is the
/// number of worlds strictly below it.
inline tqbc::Tpo from_relation(std::size_t n, const Relation& leq) {
  Keys k(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) k[x] += (leq(y, x) && !leq(x, y)) ? 1 : 0;
  }
  return tqbc::Tpo::from_keys(k);
}

/// Ordered Bell number by counting surjections {0..n-1} -> {0..k-1} for every k.
inline std::uint64_t ordered_bell(std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::uint64_t count = 0;
    std::vector<std::size_t> f(n, 0);
    while (true) {
      std::vector<bool> hit(k, false);
      for (auto v : f) hit[v] = true;
      bool surj = true;
      for (bool h : hit) surj = surj && h;
      count += surj;
      std::size_t i = 0;
      while (i < n && ++f[i] == k) f[i++] = 0;
      if (i == n) break;
    }
    total += count;
  }
  return total;
}

/// Every tpo over n worlds, as the set of distinct normalised key vectors.
inline std::set<Keys> all_key_vectors(std::size_t n) {
  std::set<Keys> out;
  Keys f(n, 0);
  while (true) {
    out.insert(keys_of(tqbc::Tpo::from_keys(f)));
    std::size_t i = 0;
    while (i < n && ++f[i] == n) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// min over a world mask by direct comparison of keys.
inline std::uint32_t min_mask(const Keys& k, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::size_t x = 0; x < k.size(); ++x) {
    if (!(mask >> x & 1u)) continue;
    bool minimal = true;
    for (std::size_t y = 0; y < k.size(); ++y) {
      if ((mask >> y & 1u) && k[y] < k[x]) minimal = false;
    }
    if (minimal) out |= 1u << x;
  }
  return out;
}

/// TeamQueue by the T_i formula on key vectors. `sched(i)` gives a(i) as bits (1, 2 or 3).
inline tqbc::Tpo team_queue(const tqbc::Tpo& t1, const tqbc::Tpo& t2, const std::function<int(std::size_t)>& sched) {
  const Keys k1 = keys_of(t1), k2 = keys_of(t2);
  const std::size_t n = k1.size();
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::uint32_t remaining = full;
  Keys out(n, 0);
  for (std::size_t i = 1; remaining; ++i) {
    const int a = sched(i);
    std::uint32_t cell = 0;
    if (a & 1) cell |= min_mask(k1, remaining);
    if (a & 2) cell |= min_mask(k2, remaining);
    for (std::size_t x = 0; x < n; ++x) {
      if (cell >> x & 1u) out[x] = static_cast<std::uint32_t>(i);
    }
    remaining &= ~cell;
  }
  return tqbc::Tpo::from_keys(out);
}

/// Revision operators written as pairwise relations over the prior keys.
inline tqbc::Tpo revise(const tqbc::Tpo& t, std::uint32_t a, tqbc::RevisionOp op) {
  const Keys k = keys_of(t);
  const std::size_t n = k.size();
  const std::uint32_t m = min_mask(k, a);
  auto in = [](std::uint32_t s, std::size_t x) { return (s >> x & 1u) != 0; };
  Relation leq;
  switch (op) {
    case tqbc::RevisionOp::Natural:
      leq = [=](std::size_t x, std::size_t y) {
        if (in(m, x)) return true;
        if (in(m, y)) return false;
        return k[x] <= k[y];
      };
      break;
    case tqbc::RevisionOp::Restrained:
      leq = [=](std::size_t x, std::size_t y) {
        if (in(m, x)) return true;
        if (in(m, y)) return false;
        if (k[x] != k[y]) return k[x] < k[y];
        return !(in(a, y) && !in(a, x));  // ties split in favour of A-worlds
      };
      break;
    case tqbc::RevisionOp::Lexicographic:
      leq = [=](std::size_t x, std::size_t y) {
        if (in(a, x) != in(a, y)) return in(a, x);
        return k[x] <= k[y];
      };
      break;
  }
  return from_relation(n, leq);
}

/// Natural contraction: min(¬A) joins the most plausible worlds, all else as before.
inline tqbc::Tpo natural_contraction(const tqbc::Tpo& t, std::uint32_t a, std::uint32_t full) {
  const Keys k = keys_of(t);
  const std::uint32_t low = min_mask(k, full & ~a) | min_mask(k, full);
  return from_relation(k.size(), [=](std::size_t x, std::size_t y) {
    if (low >> x & 1u) return true;
    if (low >> y & 1u) return false;
    return k[x] <= k[y];
  });
}

/// Lexicographic contraction: x's key is its rank among the worlds on its own side of A.
inline tqbc::Tpo lexicographic_contraction(const tqbc::Tpo& t, std::uint32_t a) {
  const Keys k = keys_of(t);
  Keys out(k.size());
  for (std::size_t x = 0; x < k.size(); ++x) {
    const bool side = a >> x & 1u;
    std::set<std::uint32_t> below;
    for (std::size_t y = 0; y < k.size(); ++y) {
      if (static_cast<bool>(a >> y & 1u) == side && k[y] < k[x]) below.insert(k[y]);
    }
    out[x] = static_cast<std::uint32_t>(below.size());
  }
  return tqbc::Tpo::from_keys(out);
}

/// Truth-table evaluation over the AST, written against the public accessors only.
inline bool eval(const tqbc::Sentence& s, std::uint32_t world) {
  using K = tqbc::Sentence::Kind;
  switch (s.kind()) {
    case K::Atom: return world >> s.atom_index() & 1u;
    case K::Top: return true;
    case K::Bot: return false;
    case K::Not: return !eval(s.operand(), world);
    case K::And: return eval(s.left(), world) && eval(s.right(), world);
    case K::Or: return eval(s.left(), world) || eval(s.right(), world);
    case K::Implies: return !eval(s.left(), world) || eval(s.right(), world);
    case K::Iff: return eval(s.left(), world) == eval(s.right(), world);
  }
  return false;
}

inline std::uint32_t models_mask(const tqbc::Sentence& s, std::size_t atoms) {
  std::uint32_t out = 0;
  for (std::uint32_t w = 0; w < (1u << atoms); ++w) out |= eval(s, w) ? (1u << w) : 0u;
  return out;
}

/// Random sentence generator for property tests.
inline tqbc::Sentence random_sentence(std::mt19937& rng, std::size_t atoms, int depth) {
  using K = tqbc::Sentence::Kind;
  const unsigned pick = depth <= 0 ? rng() % 3 : rng() % 8;
  switch (pick) {
    case 0: return tqbc::Sentence::atom(rng() % atoms);
    case 1: return rng() % 4 ? tqbc::Sentence::atom(rng() % atoms) : tqbc::Sentence::top();
    case 2: return rng() % 4 ? tqbc::Sentence::atom(rng() % atoms) : tqbc::Sentence::bot();
    case 3: return tqbc::Sentence::negation(random_sentence(rng, atoms, depth - 1));
    default: {
      static constexpr K kinds[] = {K::And, K::Or, K::Implies, K::Iff};
      const K k = kinds[rng() % 4];
      return tqbc::Sentence::binary(k, random_sentence(rng, atoms, depth - 1), random_sentence(rng, atoms, depth - 1));
    }
  }
}

/// Random tpo over n worlds from random keys.
inline tqbc::Tpo random_tpo(std::mt19937& rng, std::size_t n) {
  Keys k(n);
  for (auto& v : k) v = rng() % n;
  return tqbc::Tpo::from_keys(k);
}

}  // namespace oracle
