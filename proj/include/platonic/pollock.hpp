#ifndef PLATONIC_POLLOCK_HPP
#define PLATONIC_POLLOCK_HPP

// Bounded search for decompositions of integers into sums of platonic
// numbers drawn from all five families.
//
// Repetition mode (the default) runs a layered reachability over dense
// bitsets: layer k holds the integers whose minimal term count is exactly k.
// Layer k is the union over pool values v of layer k-1 shifted by v, minus
// everything already reached. A witness for s in layer k is rebuilt by taking
// the largest pool value v with s - v in layer k-1.
//
// Distinct mode forbids repeating a value. Minimal counts come from a 0/1
// knapsack over the pool; witnesses from a bounded depth-first search.

#include "platonic/integer.hpp"
#include "platonic/kind.hpp"
#include "platonic/sequences.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace platonic {

struct Provenance {
  PlatonicKind kind;
  std::uint64_t index = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// A platonic value together with every (kind, index) that produces it.
struct PoolEntry {
  Integer value;
  std::vector<Provenance> provenance;
};

using Pool = std::vector<PoolEntry>;

enum class TermPolicy {
  Repetition,  // a value may appear several times (88 = 85+1+1+1)
  Distinct,    // all term values pairwise different
};

constexpr std::string_view name(TermPolicy policy) {
  return policy == TermPolicy::Repetition ? "repetition" : "distinct";
}

struct Witness {
  Integer target;
  std::size_t max_terms = 5;
  std::vector<PoolEntry> terms;
};

struct ScanReport {
  std::uint64_t limit = 0;
  std::size_t max_terms = 5;
  TermPolicy policy = TermPolicy::Repetition;
  // histogram[k - 1] counts the targets whose minimal term count is k.
  std::vector<std::uint64_t> histogram;
  std::vector<std::uint64_t> failures;
  std::optional<std::vector<Witness>> witnesses;

  bool conjecture_holds() const { return failures.empty(); }
};

/// Raised when a scan would exceed the configured memory ceiling.
class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::uint64_t kDefaultScanCeiling = 100'000'000;

struct ScanOptions {
  std::size_t max_terms = 5;
  bool keep_witnesses = false;
  TermPolicy policy = TermPolicy::Repetition;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 1;
  std::uint64_t ceiling = kDefaultScanCeiling;
};

/// All platonic values in [1, limit], ascending and deduplicated. Provenance
/// pairs are listed in family order.
inline Pool platonic_pool(const Integer& limit) {
  if (limit < 1) throw DomainError("pool limit must be >= 1, got " + limit.str());
  std::map<Integer, std::vector<Provenance>> merged;
  for (PlatonicKind kind : kAllKinds) {
    for (std::uint64_t n = 1;; ++n) {
      Integer value = platonic_value(kind, n);
      if (value > limit) break;
      merged[value].push_back({kind, n});
    }
  }
  Pool pool;
  pool.reserve(merged.size());
  for (auto& [value, provenance] : merged) {
    pool.push_back({value, std::move(provenance)});
  }
  return pool;
}

/// Looks up each value in the pool. Values missing from it get an empty
/// provenance, which `verify_witness` rejects.
inline Witness witness_from_values(const Integer& target,
                                   std::span<const Integer> values,
                                   const Pool& pool,
                                   std::size_t max_terms = 5) {
  Witness w{target, max_terms, {}};
  for (const Integer& value : values) {
    auto it = std::lower_bound(
        pool.begin(), pool.end(), value,
        [](const PoolEntry& e, const Integer& v) { return e.value < v; });
    if (it != pool.end() && it->value == value) {
      w.terms.push_back(*it);
    } else {
      w.terms.push_back({value, {}});
    }
  }
  return w;
}

/// True iff the terms sum to the target within the budget and every term
/// value is re-derived from its provenance by the closed form.
inline bool verify_witness(const Witness& w,
                           TermPolicy policy = TermPolicy::Repetition) {
  if (w.terms.empty() || w.terms.size() > w.max_terms) return false;
  Integer sum = 0;
  for (const PoolEntry& term : w.terms) {
    if (term.value < 1 || term.provenance.empty()) return false;
    for (const Provenance& p : term.provenance) {
      if (p.index < 1 || platonic_value(p.kind, p.index) != term.value) {
        return false;
      }
    }
    sum += term.value;
  }
  if (policy == TermPolicy::Distinct) {
    std::vector<Integer> values;
    for (const PoolEntry& term : w.terms) values.push_back(term.value);
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
      return false;
    }
  }
  return sum == w.target;
}

namespace detail {

class DenseBits {
 public:
  DenseBits() = default;
  explicit DenseBits(std::size_t bits) : bits_(bits), words_((bits + 63) / 64) {}

  std::size_t size() const { return bits_; }
  std::size_t word_count() const { return words_.size(); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::uint64_t& word(std::size_t w) { return words_[w]; }
  std::uint64_t word(std::size_t w) const { return words_[w]; }

  // Mask for the valid bits of word w.
  std::uint64_t valid_mask(std::size_t w) const {
    const std::size_t tail = bits_ - 64 * w;
    return tail >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Word w of (src << shift).
inline std::uint64_t shifted_word(const DenseBits& src, std::size_t shift,
                                  std::size_t w) {
  const std::size_t q = shift >> 6;
  const unsigned r = shift & 63;
  if (w < q) return 0;
  std::uint64_t out = src.word(w - q) << r;
  if (r != 0 && w >= q + 1) out |= src.word(w - q - 1) >> (64 - r);
  return out;
}

inline std::vector<std::uint64_t> bounded_values(const Pool& pool,
                                                 std::uint64_t limit) {
  std::vector<std::uint64_t> values;
  for (const PoolEntry& e : pool) {
    if (e.value > limit) break;
    values.push_back(e.value.convert_to<std::uint64_t>());
  }
  return values;
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Splits [0, words) into `parts` contiguous ranges and runs body(lo, hi) on
// each. The ranges are disjoint so the result does not depend on `parts`.
template <typename Body>
void for_word_ranges(std::size_t words, unsigned parts, Body body) {
  parts = static_cast<unsigned>(std::min<std::size_t>(parts, std::max<std::size_t>(words, 1)));
  if (parts <= 1) {
    body(std::size_t{0}, words);
    return;
  }
  std::vector<std::jthread> workers;
  const std::size_t chunk = (words + parts - 1) / parts;
  for (unsigned p = 0; p < parts; ++p) {
    const std::size_t lo = p * chunk;
    const std::size_t hi = std::min(words, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
}

// layers[k - 1] holds the targets in [1, limit] with minimal count k.
struct ReachLayers {
  std::vector<DenseBits> layers;
  DenseBits reached;
};

inline ReachLayers compute_layers(std::span<const std::uint64_t> values,
                                  std::uint64_t limit, std::size_t max_terms,
                                  unsigned threads,
                                  std::optional<std::uint64_t> stop_at = {}) {
  ReachLayers out;
  const std::size_t bits = static_cast<std::size_t>(limit) + 1;
  out.reached = DenseBits(bits);
  DenseBits first(bits);
  for (std::uint64_t v : values) {
    if (v <= limit) first.set(v);
  }
  out.reached = first;
  out.layers.push_back(std::move(first));

  for (std::size_t k = 2; k <= max_terms; ++k) {
    if (stop_at && out.reached.test(*stop_at)) break;
    const DenseBits& prev = out.layers.back();
    DenseBits next(bits);
    for_word_ranges(next.word_count(), threads, [&](std::size_t lo, std::size_t hi) {
      for (std::uint64_t v : values) {
        for (std::size_t w = lo; w < hi; ++w) {
          next.word(w) |= shifted_word(prev, v, w);
        }
      }
      for (std::size_t w = lo; w < hi; ++w) {
        next.word(w) &= ~out.reached.word(w) & next.valid_mask(w);
        out.reached.word(w) |= next.word(w);
      }
    });
    out.layers.push_back(std::move(next));
  }
  return out;
}

inline std::size_t layer_of(const ReachLayers& reach, std::uint64_t target) {
  for (std::size_t k = 0; k < reach.layers.size(); ++k) {
    if (reach.layers[k].test(target)) return k + 1;
  }
  return 0;
}

// Term values of a minimal decomposition, largest first.
inline std::vector<std::uint64_t> recover_terms(
    const ReachLayers& reach, std::span<const std::uint64_t> values,
    std::uint64_t target, std::size_t count) {
  std::vector<std::uint64_t> terms;
  std::uint64_t rest = target;
  for (std::size_t k = count; k > 1; --k) {
    const DenseBits& below = reach.layers[k - 2];
    bool found = false;
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
      if (*it < rest && below.test(rest - *it)) {
        terms.push_back(*it);
        rest -= *it;
        found = true;
        break;
      }
    }
    if (!found) {
      throw ConsistencyError("no predecessor for " + std::to_string(rest) +
                             " in layer " + std::to_string(k - 1));
    }
  }
  terms.push_back(rest);
  return terms;
}

// Minimal number of pairwise distinct pool values summing to each s in
// [0, limit]; entries above max_terms are reported as max_terms + 1.
inline std::vector<std::uint8_t> distinct_min_counts(
    std::span<const std::uint64_t> values, std::uint64_t limit,
    std::size_t max_terms) {
  const auto cap = static_cast<std::uint8_t>(std::min<std::size_t>(max_terms + 1, 255));
  std::vector<std::uint8_t> best(static_cast<std::size_t>(limit) + 1, cap);
  best[0] = 0;
  for (std::uint64_t v : values) {
    if (v > limit) break;
    for (std::uint64_t s = limit; s >= v; --s) {
      const std::uint8_t via = best[s - v] + 1;
      if (via < best[s]) best[s] = via;
    }
  }
  return best;
}

// Depth-first search over pool indices below `upper` in descending order.
inline bool distinct_search(std::span<const std::uint64_t> values,
                            std::span<const std::uint8_t> best,
                            std::uint64_t rest, std::size_t upper,
                            std::size_t left, std::vector<std::uint64_t>& out) {
  if (rest == 0) return left == 0;
  if (left == 0 || best[rest] > left) return false;
  // Largest sum reachable with `left` values below `upper`.
  std::uint64_t reachable = 0;
  for (std::size_t j = 0; j < left && j < upper; ++j) {
    reachable += values[upper - 1 - j];
  }
  if (reachable < rest) return false;
  for (std::size_t i = upper; i-- > 0;) {
    if (values[i] > rest) continue;
    out.push_back(values[i]);
    if (distinct_search(values, best, rest - values[i], i, left - 1, out)) {
      return true;
    }
    out.pop_back();
  }
  return false;
}

inline std::vector<std::uint64_t> recover_distinct_terms(
    std::span<const std::uint64_t> values, std::span<const std::uint8_t> best,
    std::uint64_t target) {
  std::vector<std::uint64_t> terms;
  const auto upper = static_cast<std::size_t>(
      std::upper_bound(values.begin(), values.end(), target) - values.begin());
  if (!distinct_search(values, best, target, upper, best[target], terms)) {
    throw ConsistencyError("distinct decomposition of " +
                           std::to_string(target) + " not recoverable");
  }
  return terms;
}

inline Witness make_witness(std::uint64_t target,
                            std::span<const std::uint64_t> terms,
                            const Pool& pool, std::size_t max_terms) {
  std::vector<Integer> values(terms.begin(), terms.end());
  return witness_from_values(target, values, pool, max_terms);
}

inline std::uint64_t checked_limit(const Integer& limit, std::uint64_t ceiling,
                                   const char* what) {
  if (limit < 1) {
    throw DomainError(std::string(what) + " must be >= 1, got " + limit.str());
  }
  if (limit > ceiling) {
    throw ResourceLimit(std::string(what) + " " + limit.str() +
                        " exceeds the configured ceiling " +
                        std::to_string(ceiling));
  }
  return limit.convert_to<std::uint64_t>();
}

}  // namespace detail

/// Witness with the fewest terms, or nullopt when m needs more than
/// max_terms. The pool must contain every platonic value up to m.
inline std::optional<Witness> min_term_decomposition(
    const Integer& m, const Pool& pool, std::size_t max_terms,
    TermPolicy policy = TermPolicy::Repetition,
    std::uint64_t ceiling = kDefaultScanCeiling) {
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
  const std::uint64_t target = detail::checked_limit(m, ceiling, "target");
  const auto values = detail::bounded_values(pool, target);

  std::vector<std::uint64_t> terms;
  if (policy == TermPolicy::Repetition) {
    const auto reach = detail::compute_layers(values, target, max_terms, 1, target);
    const std::size_t count = detail::layer_of(reach, target);
    if (count == 0) return std::nullopt;
    terms = detail::recover_terms(reach, values, target, count);
  } else {
    const auto best = detail::distinct_min_counts(values, target, max_terms);
    if (best[target] > max_terms) return std::nullopt;
    terms = detail::recover_distinct_terms(values, best, target);
  }
  return detail::make_witness(target, terms, pool, max_terms);
}

/// Decides every integer in [1, N]. Witnesses, when requested, are passed to
/// `on_witness` in ascending target order; with no sink they are stored in
/// the report.
inline ScanReport scan_conjecture(
    const Integer& limit, const ScanOptions& options = {},
    const std::function<void(const Witness&)>& on_witness = {}) {
  if (options.max_terms < 1) throw DomainError("max_terms must be >= 1");
  const std::uint64_t n = detail::checked_limit(limit, options.ceiling, "scan limit");
  const Pool pool = platonic_pool(limit);
  const auto values = detail::bounded_values(pool, n);

  ScanReport report{n, options.max_terms, options.policy,
                    std::vector<std::uint64_t>(options.max_terms, 0), {}, {}};
  const bool want_witnesses = options.keep_witnesses || on_witness;
  if (options.keep_witnesses && !on_witness) report.witnesses.emplace();

  auto emit = [&](std::uint64_t target, std::span<const std::uint64_t> terms) {
    Witness w = detail::make_witness(target, terms, pool, options.max_terms);
    if (on_witness) {
      on_witness(w);
    } else {
      report.witnesses->push_back(std::move(w));
    }
  };

  if (options.policy == TermPolicy::Repetition) {
    const auto reach = detail::compute_layers(
        values, n, options.max_terms, detail::resolve_threads(options.threads));
    for (std::uint64_t s = 1; s <= n; ++s) {
      const std::size_t count = detail::layer_of(reach, s);
      if (count == 0) {
        report.failures.push_back(s);
        continue;
      }
      ++report.histogram[count - 1];
      if (want_witnesses) emit(s, detail::recover_terms(reach, values, s, count));
    }
  } else {
    const auto best = detail::distinct_min_counts(values, n, options.max_terms);
    for (std::uint64_t s = 1; s <= n; ++s) {
      if (best[s] > options.max_terms) {
        report.failures.push_back(s);
        continue;
      }
      ++report.histogram[best[s] - 1];
      if (want_witnesses) emit(s, detail::recover_distinct_terms(values, best, s));
    }
  }
  return report;
}

}  // namespace platonic

#endif  // PLATONIC_POLLOCK_HPP
