#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "compspec/digraph.hpp"
#include "compspec/spectra.hpp"

namespace compspec {

inline constexpr double kDefaultDedupTol = 1e-9;
inline constexpr int kDefaultEnumerationCap = 20;
inline constexpr int kEnumerationWarnThreshold = 15;

struct SpectrumOptions {
  double dedup_tol = kDefaultDedupTol;
  double cert_tol = kDefaultCertTol;
  int cap = kDefaultEnumerationCap;
};

/// One element of the complementarity spectrum: a certified radius value and
/// the smallest (by size, then lexicographic order) vertex set whose induced
/// subdigraph attains it.
struct SpectrumValue {
  double value = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::vector<int> witness;
};

/// The complementarity spectrum as a sorted set of certified values,
/// distinct beyond dedup_tol.
struct SpectrumSet {
  std::vector<SpectrumValue> values;
  double dedup_tol = kDefaultDedupTol;
};

struct SpectrumCardinality {
  int count = 0;
  bool exact = true;  // false means ">= count"
};

namespace detail {

// Strong connectivity of the subdigraph induced by `mask` over bitmask
// adjacency rows (forward and reverse reachability from the lowest bit).
inline bool mask_strongly_connected(std::uint64_t mask,
                                    const std::vector<std::uint64_t>& out_mask,
                                    const std::vector<std::uint64_t>& in_mask) {
  const int first = __builtin_ctzll(mask);
  for (const auto* adj : {&out_mask, &in_mask}) {
    std::uint64_t reached = 1ull << first;
    std::uint64_t frontier = reached;
    while (frontier != 0) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f != 0) {
        const int v = __builtin_ctzll(f);
        f &= f - 1;
        next |= (*adj)[v];
      }
      next &= mask & ~reached;
      reached |= next;
      frontier = next;
    }
    if (reached != mask) return false;
  }
  return true;
}

// Accumulates candidate (value, witness) pairs into tolerance-separated
// clusters. Per value, keeps the smallest witness by (size, lex); that
// witness's certificate is the cluster representative, so the result does
// not depend on insertion order. A gap inside (dedup_tol, 10*dedup_tol]
// aborts rather than merging silently.
class SpectrumAccumulator {
 public:
  explicit SpectrumAccumulator(double dedup_tol) : dedup_tol_(dedup_tol) {}

  void insert(double value, double lower, double upper,
              std::vector<int> witness) {
    auto it = std::lower_bound(
        clusters_.begin(), clusters_.end(), value,
        [](const SpectrumValue& c, double v) { return c.value < v; });
    for (auto cand : {it == clusters_.begin() ? clusters_.end() : it - 1, it}) {
      if (cand == clusters_.end()) continue;
      const double gap = std::abs(cand->value - value);
      if (gap <= dedup_tol_) {
        if (smaller_witness(witness, cand->witness)) {
          cand->value = value;
          cand->lower_bound = lower;
          cand->upper_bound = upper;
          cand->witness = std::move(witness);
        }
        return;
      }
      if (gap <= 10.0 * dedup_tol_)
        throw DedupAmbiguousError(gap, dedup_tol_);
    }
    clusters_.insert(it, {value, lower, upper, std::move(witness)});
  }

  int size() const { return static_cast<int>(clusters_.size()); }
  std::vector<SpectrumValue> take() { return std::move(clusters_); }

 private:
  static bool smaller_witness(const std::vector<int>& a,
                              const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }

  double dedup_tol_;
  std::vector<SpectrumValue> clusters_;
};

// Visits every nonempty subset of one strongly connected component whose
// induced subdigraph is strongly connected, in the requested size order
// (sizes lists |S| values; subsets are lexicographic within a size).
// visit(vertices) -> false stops the enumeration early.
template <typename Visit>
void for_each_sc_subset(const Digraph& d, const std::vector<int>& component,
                        const std::vector<int>& sizes, Visit visit) {
  const int k = static_cast<int>(component.size());
  std::vector<std::uint64_t> out_mask(k, 0), in_mask(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && d.has_arc(component[i], component[j])) {
        out_mask[i] |= 1ull << j;
        in_mask[j] |= 1ull << i;
      }
    }
  }
  std::vector<int> combo;
  for (int size : sizes) {
    if (size < 1 || size > k) continue;
    combo.resize(size);
    for (int i = 0; i < size; ++i) combo[i] = i;
    for (;;) {
      std::uint64_t mask = 0;
      for (int idx : combo) mask |= 1ull << idx;
      if (mask_strongly_connected(mask, out_mask, in_mask)) {
        std::vector<int> vertices(size);
        for (int i = 0; i < size; ++i) vertices[i] = component[combo[i]];
        if (!visit(vertices)) return;
      }
      // next combination, lexicographic
      int pos = size - 1;
      while (pos >= 0 && combo[pos] == k - size + pos) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (int i = pos + 1; i < size; ++i) combo[i] = combo[i - 1] + 1;
    }
  }
}

inline void check_enumerable(const Digraph& d, const SpectrumOptions& opts) {
  if (d.vertex_count() == 0) throw EmptyGraphError();
  for (const auto& comp : scc_decompose(d).components)
    if (static_cast<int>(comp.size()) > opts.cap)
      throw TooLargeError(d.vertex_count(), opts.cap);
  if (d.vertex_count() > opts.cap && d.vertex_count() > 0) {
    // components may individually fit; the cap is on enumeration work,
    // which is per component, so only oversized components are fatal.
  }
}

inline SpectrumValue certify_subset(const Digraph& d,
                                    const std::vector<int>& vertices,
                                    double cert_tol) {
  if (vertices.size() == 1) return {0.0, 0.0, 0.0, vertices};
  const auto induced = induced_subdigraph(d, vertices);
  const auto cert = spectral_radius(induced.digraph, cert_tol);
  return {cert.rho_estimate, cert.lower_bound, cert.upper_bound, vertices};
}

}  // namespace detail

/// Brute-force complementarity spectrum: the set of spectral radii of all
/// induced strongly connected subdigraphs, computed by enumerating subsets
/// within each strongly connected component (subsets spanning several
/// components are never strongly connected, so they are skipped).
inline SpectrumSet comp_spectrum(const Digraph& d,
                                 const SpectrumOptions& opts = {}) {
  detail::check_enumerable(d, opts);
  detail::SpectrumAccumulator acc(opts.dedup_tol);
  for (const auto& comp : scc_decompose(d).components) {
    std::vector<int> sizes(comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
      sizes[i] = static_cast<int>(i) + 1;
    detail::for_each_sc_subset(
        d, comp, sizes, [&](const std::vector<int>& vertices) {
          auto v = detail::certify_subset(d, vertices, opts.cert_tol);
          acc.insert(v.value, v.lower_bound, v.upper_bound,
                     std::move(v.witness));
          return true;
        });
  }
  return {acc.take(), opts.dedup_tol};
}

/// Number of distinct complementarity eigenvalues, short-circuited: once
/// `limit` distinct values have been found the enumeration stops and the
/// result is reported as ">= limit" (exact = false). The default limit 4
/// matches the classifier's verdict domain {1, 2, 3, >=4}. Subset sizes are
/// visited as 1, k, k-1, ..., 2 per component so that the three structurally
/// guaranteed values (0, the component radius, 1) surface early.
inline SpectrumCardinality comp_spectrum_cardinality(
    const Digraph& d, const SpectrumOptions& opts = {}, int limit = 4) {
  detail::check_enumerable(d, opts);
  if (limit < 1) throw BadParamsError("limit must be positive");
  detail::SpectrumAccumulator acc(opts.dedup_tol);
  for (const auto& comp : scc_decompose(d).components) {
    const int k = static_cast<int>(comp.size());
    std::vector<int> sizes{1};
    for (int s = k; s >= 2; --s) sizes.push_back(s);
    bool stopped = false;
    detail::for_each_sc_subset(d, comp, sizes,
                               [&](const std::vector<int>& vertices) {
                                 auto v = detail::certify_subset(
                                     d, vertices, opts.cert_tol);
                                 acc.insert(v.value, v.lower_bound,
                                            v.upper_bound,
                                            std::move(v.witness));
                                 stopped = acc.size() >= limit;
                                 return !stopped;
                               });
    if (stopped) return {limit, false};
  }
  return {acc.size(), true};
}

}  // namespace compspec
