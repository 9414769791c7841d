#include "minorsieve/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "minorsieve/canonical.hpp"
#include "minorsieve/planarity.hpp"

namespace minorsieve {

namespace {

constexpr std::uint64_t bit(unsigned i) { return std::uint64_t{1} << i; }

struct Parent {
  std::vector<std::uint64_t> rows;
  CanonicalForm form;
};

// Constraints applied while augmenting the last level.
struct FinalPrune {
  std::size_t min_degree = 0;
  std::size_t min_new_degree = 0;
  std::size_t max_new_degree = 64;
};

// Calls emit(child_rows, child_form) for every child of `parent` accepted by
// the canonical augmentation rule: the new vertex n-1 must be a vertex of
// maximum degree whose deletion yields the parent class, where the deleted
// vertex is the last maximum-degree vertex in canonical order. Sibling
// duplicates are removed with a per-parent key set.
template <class Emit>
void augment(const Parent& parent, std::size_t n, const FinalPrune* prune,
             const std::vector<std::uint64_t>& subsets, Emit&& emit) {
  const unsigned k = static_cast<unsigned>(n - 1);
  std::array<std::uint64_t, Graph::kMaxOrder> rows{};
  std::copy(parent.rows.begin(), parent.rows.end(), rows.begin());
  std::size_t parent_max = 0;
  std::uint64_t must = 0;
  std::array<std::size_t, Graph::kMaxOrder> deg{};
  for (unsigned v = 0; v < k; ++v) {
    deg[v] = static_cast<std::size_t>(std::popcount(rows[v]));
    parent_max = std::max(parent_max, deg[v]);
  }
  if (prune && prune->min_degree > 0) {
    for (unsigned v = 0; v < k; ++v) {
      if (deg[v] + 1 < prune->min_degree) return;
      if (deg[v] + 1 == prune->min_degree) must |= bit(v);
    }
  }
  std::unordered_set<CanonicalForm> siblings;
  for (std::uint64_t s : subsets) {
    if ((s & must) != must) continue;
    const auto d = static_cast<std::size_t>(std::popcount(s));
    if (prune && (d < prune->min_new_degree || d > prune->max_new_degree)) continue;
    // New vertex must have maximum degree in the child.
    std::size_t child_max = d;
    for (std::uint64_t m = s; m; m &= m - 1) {
      child_max = std::max(child_max, deg[std::countr_zero(m)] + 1);
    }
    if (d < child_max || d < parent_max) continue;
    for (std::uint64_t m = s; m; m &= m - 1) rows[std::countr_zero(m)] |= bit(k);
    rows[k] = s;
    const Graph child = Graph::from_rows(std::span<const std::uint64_t>(rows.data(), n));
    for (std::uint64_t m = s; m; m &= m - 1) rows[std::countr_zero(m)] &= ~bit(k);
    rows[k] = 0;

    const CanonicalLabeling lab = canonical_labeling(child);
    Vertex last = k;
    Vertex best_pos = 0;
    bool any = false;
    for (Vertex v = 0; v <= k; ++v) {
      if (child.degree(v) != d) continue;
      if (!any || lab.position[v] > best_pos) {
        best_pos = lab.position[v];
        last = v;
        any = true;
      }
    }
    if (last != k && canonical(delete_vertex(child, last)) != parent.form) continue;
    if (!siblings.insert(lab.form).second) continue;
    emit(child, lab.form);
  }
}

std::vector<std::uint64_t> subset_order(std::size_t parent_order,
                                        const std::optional<std::uint64_t>& seed) {
  std::vector<std::uint64_t> subsets(std::size_t{1} << parent_order);
  std::iota(subsets.begin(), subsets.end(), std::uint64_t{0});
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(subsets.begin(), subsets.end(), rng);
  }
  return subsets;
}

// All graphs of order n, one per class, in canonical labelling.
std::vector<Parent> level(std::size_t n, const std::optional<std::uint64_t>& seed) {
  std::vector<Parent> current;
  current.push_back({{}, canonical(Graph(0))});
  for (std::size_t order = 1; order <= n; ++order) {
    const auto subsets = subset_order(order - 1, seed);
    std::vector<Parent> next;
    for (const Parent& p : current) {
      augment(p, order, nullptr, subsets, [&](const Graph&, const CanonicalForm& f) {
        const Graph c = f.graph();
        next.push_back({{c.rows().begin(), c.rows().end()}, f});
      });
    }
    std::sort(next.begin(), next.end(),
              [](const Parent& a, const Parent& b) { return a.form < b.form; });
    current = std::move(next);
  }
  return current;
}

// Runs work(worker) on `jobs` threads, rethrowing the first exception.
template <class Work>
void run_workers(std::size_t jobs, Work&& work) {
  if (jobs <= 1) {
    work(std::size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (std::size_t w = 0; w < jobs; ++w) {
    threads.emplace_back([&, w] {
      try {
        work(w);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

void check_filter(const EnumFilter& f, const EnumOptions& o) {
  if (f.order > o.max_order) {
    throw ResourceLimitError("enumeration order " + std::to_string(f.order) +
                             " exceeds the configured maximum " + std::to_string(o.max_order));
  }
  if (f.order > Graph::kMaxOrder) throw std::invalid_argument("order above 64");
  const std::size_t pairs = f.order * (f.order ? f.order - 1 : 0) / 2;
  if ((f.min_size && *f.min_size > pairs) || (f.max_size && *f.max_size > pairs)) {
    throw std::invalid_argument("size range outside 0..C(order,2)");
  }
  if (o.shard_count == 0 || o.shard_index >= o.shard_count || o.jobs == 0) {
    throw std::invalid_argument("bad shard or job settings");
  }
}

}  // namespace

bool EnumFilter::accepts(const Graph& g) const {
  if (g.order() != order) return false;
  if (min_size && g.size() < *min_size) return false;
  if (max_size && g.size() > *max_size) return false;
  if (min_degree && order > 0 && minorsieve::min_degree(g) < *min_degree) return false;
  if (connected && !is_connected(g)) return false;
  if (planarity != PlanarityFilter::KeepAll) {
    if (is_planar(g) != (planarity == PlanarityFilter::KeepPlanar)) return false;
  }
  return true;
}

void enumerate(const EnumFilter& filter, const std::function<void(const Graph&)>& sink,
               const EnumOptions& options) {
  check_filter(filter, options);
  const std::size_t n = filter.order;
  if (n == 0) {
    const Graph g(0);
    if (options.shard_index == 0 && filter.accepts(g)) sink(g);
    return;
  }
  const std::vector<Parent> parents = level(n - 1, options.shuffle_seed);
  const auto subsets = subset_order(n - 1, options.shuffle_seed);
  FinalPrune prune;
  prune.min_degree = filter.min_degree.value_or(0);
  prune.min_new_degree = prune.min_degree;
  std::atomic<std::size_t> next_parent{0};
  run_workers(options.jobs, [&](std::size_t) {
    for (;;) {
      const std::size_t i = next_parent.fetch_add(1);
      if (i >= parents.size()) break;
      if (i % options.shard_count != options.shard_index) continue;
      const Parent& p = parents[i];
      if (filter.min_size || filter.max_size) {
        std::size_t parent_size = 0;
        for (auto r : p.rows) parent_size += static_cast<std::size_t>(std::popcount(r));
        parent_size /= 2;
        FinalPrune local = prune;
        if (filter.max_size) {
          if (parent_size > *filter.max_size) continue;
          local.max_new_degree = *filter.max_size - parent_size;
        }
        if (filter.min_size && *filter.min_size > parent_size) {
          local.min_new_degree = std::max(local.min_new_degree, *filter.min_size - parent_size);
        }
        augment(p, n, &local, subsets, [&](const Graph&, const CanonicalForm& f) {
          const Graph c = f.graph();
          if (filter.accepts(c)) sink(c);
        });
      } else {
        augment(p, n, &prune, subsets, [&](const Graph&, const CanonicalForm& f) {
          const Graph c = f.graph();
          if (filter.accepts(c)) sink(c);
        });
      }
    }
  });
}

std::vector<Graph> enumerate_all(const EnumFilter& filter, const EnumOptions& options) {
  std::vector<std::pair<CanonicalForm, Graph>> out;
  std::mutex m;
  enumerate(
      filter,
      [&](const Graph& g) {
        auto f = canonical(g);
        std::lock_guard lock(m);
        out.emplace_back(std::move(f), g);
      },
      options);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> result;
  result.reserve(out.size());
  for (auto& [f, g] : out) result.push_back(std::move(g));
  return result;
}

std::size_t count_graphs(const EnumFilter& filter, const EnumOptions& options) {
  std::atomic<std::size_t> count{0};
  enumerate(filter, [&](const Graph&) { count.fetch_add(1, std::memory_order_relaxed); }, options);
  return count.load();
}

std::string describe(const EnumFilter& f) {
  std::ostringstream os;
  if (f.order) os << " order=" << f.order;
  if (f.min_size) os << " min_size=" << *f.min_size;
  if (f.max_size) os << " max_size=" << *f.max_size;
  if (f.min_degree) os << " min_degree=" << *f.min_degree;
  if (f.connected) os << " connected";
  if (f.planarity == PlanarityFilter::KeepPlanar) os << " planar";
  if (f.planarity == PlanarityFilter::KeepNonplanar) os << " nonplanar";
  const std::string s = os.str();
  return s.empty() ? "all graphs" : s.substr(1);
}

EnumFilter default_search_filter(PropertyId p) {
  EnumFilter f;
  f.planarity = implies_nonplanar(p) ? PlanarityFilter::KeepNonplanar : PlanarityFilter::KeepPlanar;
  return f;
}

SearchReport search_minor_minimal(PropertyId p, std::size_t min_order, std::size_t max_order,
                                  const EnumFilter& filter, const EnumOptions& options,
                                  const SieveOptions& sieve) {
  if (min_order > max_order) throw std::invalid_argument("empty order range");
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.property = p;
  report.min_order = min_order;
  report.max_order = max_order;
  report.filter = filter;
  std::vector<std::pair<CanonicalForm, Graph>> found;
  std::mutex m;
  std::atomic<std::size_t> scanned{0};
  for (std::size_t n = min_order; n <= max_order; ++n) {
    EnumFilter f = filter;
    f.order = n;
    enumerate(
        f,
        [&](const Graph& g) {
          scanned.fetch_add(1, std::memory_order_relaxed);
          if (!is_minor_minimal(g, p, sieve)) return;
          auto key = canonical(g);
          std::lock_guard lock(m);
          found.emplace_back(std::move(key), g);
        },
        options);
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, g] : found) report.found.push_back(std::move(g));
  report.scanned = scanned.load();
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace minorsieve
