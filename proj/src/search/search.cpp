#include "extremal/search.hpp"

#include "extremal/bounds.hpp"
#include "extremal/error.hpp"
#include "extremal/modp.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace extremal {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr std::size_t kAdjacencyMatrixLimit = 8192;
constexpr std::size_t kColoringLimit = 256;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::uint64_t space_cap(const SearchOptions& options) {
    if (options.max_space) {
        return *options.max_space;
    }
    if (const char* env = std::getenv("EXTREMAL_MAX_SPACE"); env != nullptr && *env != '\0') {
        std::uint64_t value = 0;
        const char* end = env + std::char_traits<char>::length(env);
        const auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec != std::errc{} || ptr != end) {
            throw MalformedInput(std::string("EXTREMAL_MAX_SPACE is not a nonnegative integer: ") + env);
        }
        return value;
    }
    return kDefaultMaxSpace;
}

/// q^n, or nullopt when it does not fit in 32 bits.
std::optional<std::uint64_t> space_size(std::size_t n, std::uint32_t q) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < n; ++i) {
        v *= q;
        if (v > std::numeric_limits<std::uint32_t>::max()) {
            return std::nullopt;
        }
    }
    return v;
}

bool translation_invariant(const Predicate& predicate) {
    return !std::holds_alternative<IntersectionConstant>(predicate);
}

/// Compatibility graph over [0,q-1]^n. Vertex index = tuple read as a base-q
/// number with coordinate 0 most significant, so index order is lex order.
class CompatibilityGraph {
public:
    CompatibilityGraph(const SearchProblem& problem, std::uint32_t vertices)
        : n_(problem.n), q_(problem.q), vertices_(vertices), allowed_(problem.n + 1, false) {
        std::visit(Overloaded{
                       [this](const DistanceWithin& p) {
                           for (auto d : p.allowed) {
                               allowed_[d] = true;
                           }
                       },
                       [this](const DistanceCongruent& p) {
                           for (std::size_t d = 1; d <= n_; ++d) {
                               allowed_[d] = d % p.p == p.lambda;
                           }
                       },
                       [this](const ConstantDistance& p) { allowed_[p.lambda] = true; },
                       [this](const IntersectionConstant& p) {
                           intersection_ = true;
                           allowed_[p.lambda] = true;
                       },
                   },
                   problem.predicate);
        if (q_ != 2) {
            digits_.resize(static_cast<std::size_t>(vertices_) * n_);
            for (std::uint32_t v = 0; v < vertices_; ++v) {
                std::uint32_t x = v;
                for (std::size_t i = n_; i-- > 0;) {
                    digits_[static_cast<std::size_t>(v) * n_ + i] = static_cast<std::uint8_t>(x % q_);
                    x /= q_;
                }
            }
        }
        if (vertices_ <= kAdjacencyMatrixLimit) {
            words_ = (vertices_ + 63) / 64;
            bits_.assign(static_cast<std::size_t>(vertices_) * words_, 0);
            for (std::uint32_t a = 0; a < vertices_; ++a) {
                for (std::uint32_t b = a + 1; b < vertices_; ++b) {
                    if (compute(a, b)) {
                        bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
                        bits_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
                    }
                }
            }
        }
    }

    std::uint32_t vertices() const noexcept { return vertices_; }

    bool adjacent(std::uint32_t a, std::uint32_t b) const {
        if (!bits_.empty()) {
            return (bits_[a * words_ + b / 64] >> (b % 64)) & 1U;
        }
        return a != b && compute(a, b);
    }

    Tuple tuple(std::uint32_t v) const {
        Tuple t(n_);
        for (std::size_t i = n_; i-- > 0;) {
            t[i] = static_cast<std::uint8_t>(v % q_);
            v /= q_;
        }
        return t;
    }

private:
    bool compute(std::uint32_t a, std::uint32_t b) const {
        std::size_t value = 0;
        if (q_ == 2) {
            value = static_cast<std::size_t>(intersection_ ? std::popcount(a & b) : std::popcount(a ^ b));
        } else {
            const auto* da = &digits_[static_cast<std::size_t>(a) * n_];
            const auto* db = &digits_[static_cast<std::size_t>(b) * n_];
            for (std::size_t i = 0; i < n_; ++i) {
                value += static_cast<std::size_t>(da[i] != db[i]);
            }
        }
        return allowed_[value];
    }

    std::size_t n_;
    std::uint32_t q_;
    std::uint32_t vertices_;
    std::vector<bool> allowed_;
    bool intersection_ = false;
    std::vector<std::uint8_t> digits_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct Shared {
    std::atomic<std::size_t> best{1};
    std::atomic<std::size_t> first_target_task{kNone};
    std::atomic<std::uint64_t> nodes{0};
};

/// Enumerates (first, second) prefixes in order, lazily.
class TaskQueue {
public:
    TaskQueue(const CompatibilityGraph& g, const std::vector<std::uint32_t>& order, std::uint32_t first_limit)
        : g_(g), order_(order), first_limit_(first_limit) {}

    struct Task {
        std::size_t index;
        std::uint32_t first;  // position in order
        std::uint32_t second; // position in order
    };

    std::optional<Task> next() {
        std::lock_guard lock(mutex_);
        const std::uint32_t size = g_.vertices();
        while (first_ < first_limit_) {
            while (++second_ < size) {
                if (g_.adjacent(order_[first_], order_[second_])) {
                    return Task{count_++, first_, second_};
                }
            }
            ++first_;
            second_ = first_;
        }
        return std::nullopt;
    }

private:
    const CompatibilityGraph& g_;
    const std::vector<std::uint32_t>& order_;
    std::uint32_t first_limit_;
    std::mutex mutex_;
    std::uint32_t first_ = 0;
    std::uint32_t second_ = 0;
    std::size_t count_ = 0;
};

/// Depth-first clique extension over positions in `order`.
class Worker {
public:
    Worker(const CompatibilityGraph& g, const std::vector<std::uint32_t>& order, Shared& shared,
           std::optional<std::size_t> target)
        : g_(g), order_(order), shared_(shared), target_(target) {}

    struct Outcome {
        std::size_t size = 0;
        std::vector<std::uint32_t> clique; // positions
        bool reached_target = false;
    };

    Outcome run(const TaskQueue::Task& task) {
        task_index_ = task.index;
        local_best_ = 1;
        best_clique_.clear();
        reached_target_ = false;
        stop_ = false;
        nodes_ = 0;

        const std::uint32_t size = g_.vertices();
        const std::uint32_t a = order_[task.first];
        const std::uint32_t b = order_[task.second];
        if (!pruned(2 + (size - 1 - task.second))) {
            std::vector<std::uint32_t> cand;
            for (std::uint32_t pos = task.second + 1; pos < size; ++pos) {
                const auto v = order_[pos];
                if (g_.adjacent(a, v) && g_.adjacent(b, v)) {
                    cand.push_back(pos);
                }
            }
            clique_ = {task.first, task.second};
            expand(cand);
        }
        shared_.nodes.fetch_add(nodes_, std::memory_order_relaxed);
        return Outcome{best_clique_.size(), best_clique_, reached_target_};
    }

private:
    bool pruned(std::size_t reach) const {
        return reach <= local_best_ || reach < shared_.best.load(std::memory_order_relaxed);
    }

    bool aborted() const {
        return shared_.first_target_task.load(std::memory_order_relaxed) < task_index_;
    }

    void record() {
        local_best_ = clique_.size();
        best_clique_ = clique_;
        std::size_t seen = shared_.best.load(std::memory_order_relaxed);
        while (seen < local_best_ && !shared_.best.compare_exchange_weak(seen, local_best_)) {
        }
        if (target_ && local_best_ >= *target_) {
            reached_target_ = true;
            stop_ = true;
            std::size_t first = shared_.first_target_task.load();
            while (task_index_ < first && !shared_.first_target_task.compare_exchange_weak(first, task_index_)) {
            }
        }
    }

    std::size_t color_bound(const std::vector<std::uint32_t>& cand) const {
        std::vector<std::vector<std::uint32_t>> classes;
        for (auto pos : cand) {
            const auto v = order_[pos];
            auto fits = [&](const std::vector<std::uint32_t>& cls) {
                return std::none_of(cls.begin(), cls.end(), [&](std::uint32_t u) { return g_.adjacent(u, v); });
            };
            auto it = std::find_if(classes.begin(), classes.end(), fits);
            if (it == classes.end()) {
                classes.push_back({v});
            } else {
                it->push_back(v);
            }
        }
        return classes.size();
    }

    void expand(const std::vector<std::uint32_t>& cand) {
        ++nodes_;
        if (clique_.size() > local_best_) {
            record();
            if (stop_) {
                return;
            }
        }
        if (aborted()) {
            stop_ = true;
            return;
        }
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (pruned(clique_.size() + (cand.size() - i))) {
                return;
            }
            const auto pos = cand[i];
            const auto v = order_[pos];
            std::vector<std::uint32_t> next;
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                if (g_.adjacent(v, order_[cand[j]])) {
                    next.push_back(cand[j]);
                }
            }
            if (next.size() <= kColoringLimit && pruned(clique_.size() + 1 + color_bound(next))) {
                continue;
            }
            clique_.push_back(pos);
            expand(next);
            clique_.pop_back();
            if (stop_) {
                return;
            }
        }
    }

    const CompatibilityGraph& g_;
    const std::vector<std::uint32_t>& order_;
    Shared& shared_;
    std::optional<std::size_t> target_;

    std::size_t task_index_ = 0;
    std::size_t local_best_ = 1;
    std::vector<std::uint32_t> clique_;
    std::vector<std::uint32_t> best_clique_;
    bool reached_target_ = false;
    bool stop_ = false;
    std::uint64_t nodes_ = 0;
};

VectorSystem make_witness(const CompatibilityGraph& g, const SearchProblem& problem,
                          const std::vector<std::uint32_t>& vertices) {
    std::vector<Tuple> tuples;
    tuples.reserve(vertices.size());
    for (auto v : vertices) {
        tuples.push_back(g.tuple(v));
    }
    std::sort(tuples.begin(), tuples.end());
    return VectorSystem(problem.n, problem.q, std::move(tuples));
}

std::string join(const std::vector<std::size_t>& values) {
    std::string out;
    for (auto v : values) {
        out += (out.empty() ? "" : ",") + std::to_string(v);
    }
    return out;
}

} // namespace

std::string describe(const Predicate& predicate) {
    return std::visit(Overloaded{
                          [](const DistanceWithin& p) { return "distanceSetWithin({" + join(p.allowed) + "})"; },
                          [](const DistanceCongruent& p) {
                              return "distanceCongruent(" + std::to_string(p.lambda) + " mod " +
                                     std::to_string(p.p) + ")";
                          },
                          [](const ConstantDistance& p) { return "constantDistance(" + std::to_string(p.lambda) + ")"; },
                          [](const IntersectionConstant& p) {
                              return "intersectionConstant(" + std::to_string(p.lambda) + ")";
                          },
                      },
                      predicate);
}

void validate(const SearchProblem& problem) {
    const auto n = problem.n;
    if (n == 0) {
        throw MalformedInput("n must be positive");
    }
    if (problem.q < 2 || problem.q > 256) {
        throw MalformedInput("q=" + std::to_string(problem.q) + " outside [2,256]");
    }
    if (problem.target && *problem.target == 0) {
        throw MalformedInput("target must be positive");
    }
    std::visit(Overloaded{
                   [n](const DistanceWithin& p) {
                       if (p.allowed.empty()) {
                           throw MalformedInput("L must be nonempty");
                       }
                       for (auto d : p.allowed) {
                           if (d == 0 || d > n) {
                               throw MalformedInput("L entry " + std::to_string(d) + " outside [1," +
                                                    std::to_string(n) + "]");
                           }
                       }
                   },
                   [](const DistanceCongruent& p) {
                       if (p.p < 2) {
                           throw MalformedInput("p must be at least 2");
                       }
                       if (p.lambda == 0 || p.lambda >= p.p) {
                           throw MalformedInput("lambda must satisfy 0 < lambda < p");
                       }
                   },
                   [n](const ConstantDistance& p) {
                       if (p.lambda == 0 || p.lambda > n) {
                           throw MalformedInput("lambda must satisfy 0 < lambda <= n");
                       }
                   },
                   [&problem, n](const IntersectionConstant& p) {
                       if (problem.q != 2) {
                           throw MalformedInput("intersection predicates need q = 2");
                       }
                       if (p.lambda == 0 || p.lambda > n) {
                           throw MalformedInput("lambda must satisfy 0 < lambda <= n");
                       }
                   },
               },
               problem.predicate);
}

bool compatible(const SearchProblem& problem, std::span<const std::uint8_t> u, std::span<const std::uint8_t> v) {
    if (std::equal(u.begin(), u.end(), v.begin(), v.end())) {
        return false;
    }
    return std::visit(Overloaded{
                          [&](const DistanceWithin& p) {
                              const auto d = hamming_distance(u, v);
                              return std::find(p.allowed.begin(), p.allowed.end(), d) != p.allowed.end();
                          },
                          [&](const DistanceCongruent& p) { return hamming_distance(u, v) % p.p == p.lambda; },
                          [&](const ConstantDistance& p) { return hamming_distance(u, v) == p.lambda; },
                          [&](const IntersectionConstant& p) {
                              std::size_t common = 0;
                              for (std::size_t i = 0; i < u.size(); ++i) {
                                  common += static_cast<std::size_t>(u[i] != 0 && v[i] != 0);
                              }
                              return common == p.lambda;
                          },
                      },
                      problem.predicate);
}

SearchResult search_max(const SearchProblem& problem, const SearchOptions& options) {
    validate(problem);
    const auto space = space_size(problem.n, problem.q);
    const auto cap = space_cap(options);
    if (!space || *space > cap) {
        throw ResourceGuard("search space q^n = " + std::to_string(problem.q) + "^" + std::to_string(problem.n) +
                            " exceeds the cap of " + std::to_string(cap) + " (set EXTREMAL_MAX_SPACE to override)");
    }
    const auto size = static_cast<std::uint32_t>(*space);
    CompatibilityGraph graph(problem, size);

    std::vector<std::uint32_t> order(size);
    std::iota(order.begin(), order.end(), 0U);
    // Translating a family by a fixed tuple preserves distances, and the
    // lexicographically least maximum family always contains 0 (translate by
    // its first member), so only prefixes starting at 0 need exploring.
    std::uint32_t first_limit = translation_invariant(problem.predicate) ? 1 : size;
    if (options.permutation_seed) {
        std::mt19937_64 rng(*options.permutation_seed);
        std::shuffle(order.begin(), order.end(), rng);
        first_limit = size;
    }

    SearchResult result;
    result.max_size = 1;
    result.witness = make_witness(graph, problem, {order.front()});
    result.nodes = 1;
    if (problem.target && *problem.target <= 1) {
        result.exhaustive = false;
        result.target_reached = true;
        return result;
    }

    Shared shared;
    TaskQueue queue(graph, order, first_limit);
    std::mutex merge_mutex;
    std::size_t winner_index = kNone;
    Worker::Outcome winner;
    std::exception_ptr failure;

    auto better = [&](const Worker::Outcome& out, std::size_t index) {
        if (winner_index == kNone) {
            return true;
        }
        if (out.reached_target != winner.reached_target) {
            return out.reached_target;
        }
        if (!out.reached_target && out.size != winner.size) {
            return out.size > winner.size;
        }
        return index < winner_index;
    };

    auto work = [&] {
        try {
            Worker worker(graph, order, shared, problem.target);
            while (auto task = queue.next()) {
                if (shared.first_target_task.load() < task->index) {
                    break;
                }
                auto out = worker.run(*task);
                if (out.size < 2) {
                    continue;
                }
                std::lock_guard lock(merge_mutex);
                if (better(out, task->index)) {
                    winner_index = task->index;
                    winner = std::move(out);
                }
            }
        } catch (...) {
            std::lock_guard lock(merge_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    };

    const unsigned jobs = std::max(1U, options.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned i = 0; i < jobs; ++i) {
            threads.emplace_back(work);
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    result.nodes += shared.nodes.load();
    if (winner_index != kNone) {
        std::vector<std::uint32_t> vertices;
        for (auto pos : winner.clique) {
            vertices.push_back(order[pos]);
        }
        result.max_size = winner.size;
        result.witness = make_witness(graph, problem, vertices);
        result.target_reached = winner.reached_target;
    }
    if (problem.target) {
        result.target_reached = result.max_size >= *problem.target;
        result.exhaustive = !result.target_reached;
    }
    return result;
}

SearchResult search_max_distance_count(std::size_t n, std::uint32_t q, std::size_t s, const SearchOptions& options) {
    if (s == 0 || s > n) {
        throw MalformedInput("distance count s must satisfy 0 < s <= n");
    }
    // Every s-subset of [n] is a candidate distance set; s = n is the whole space.
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(s), true);
    std::optional<SearchResult> best;
    std::uint64_t nodes = 0;
    do {
        DistanceWithin within;
        for (std::size_t d = 0; d < n; ++d) {
            if (mask[d]) {
                within.allowed.push_back(d + 1);
            }
        }
        auto r = search_max(SearchProblem{n, q, within, std::nullopt}, options);
        nodes += r.nodes;
        if (!best || r.max_size > best->max_size ||
            (r.max_size == best->max_size && r.witness.vectors() < best->witness.vectors())) {
            best = std::move(r);
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    best->nodes = nodes;
    return *best;
}

const SweepRow* SweepReport::find_modular(std::size_t n, std::uint32_t q, std::uint32_t p,
                                          std::uint32_t lambda) const {
    for (const auto& row : rows) {
        if (row.family == "modular-distance" && row.n == n && row.q == q && row.p == p && row.lambda == lambda) {
            return &row;
        }
    }
    return nullptr;
}

std::string SweepReport::table() const {
    std::ostringstream out;
    out << std::left << std::setw(18) << "family" << std::setw(4) << "n" << std::setw(4) << "q" << std::setw(4)
        << "p" << std::setw(8) << "lambda" << std::setw(4) << "s" << std::setw(8) << "bound" << std::setw(6) << "max"
        << std::setw(7) << "tight" << "status\n";
    for (const auto& row : rows) {
        const bool modular = row.family == "modular-distance";
        out << std::setw(18) << row.family << std::setw(4) << row.n << std::setw(4) << row.q << std::setw(4)
            << (modular ? std::to_string(row.p) : "-") << std::setw(8)
            << (modular ? std::to_string(row.lambda) : "-") << std::setw(4)
            << (modular ? "-" : std::to_string(row.s)) << std::setw(8)
            << (row.bound ? to_string(*row.bound) : "-") << std::setw(6)
            << (row.exact_max ? std::to_string(*row.exact_max) : "-") << std::setw(7)
            << (row.exact_max ? (row.tight ? "yes" : "no") : "-") << row.status << "\n";
    }
    return out.str();
}

SweepReport sweep_bound_grid(std::size_t n_max, std::uint32_t q_max, std::uint32_t p_max, std::size_t s_max,
                             const SearchOptions& options) {
    SweepReport report;
    auto settle = [&report](SweepRow& row, std::size_t found) {
        row.exact_max = found;
        const BigInt value(static_cast<unsigned long>(found));
        row.tight = value == *row.bound;
        if (value > *row.bound) {
            row.status = "violation";
            ++report.violations;
        } else {
            row.status = "ok";
        }
    };
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (std::uint32_t q = 2; q <= q_max; ++q) {
            for (std::uint32_t p = 3; p <= p_max; ++p) {
                if (!is_prime(p)) {
                    continue;
                }
                for (std::uint32_t lambda = 1; lambda < p; ++lambda) {
                    SweepRow row;
                    row.family = "modular-distance";
                    row.n = n;
                    row.q = q;
                    row.p = p;
                    row.lambda = lambda;
                    const auto h = check_modular_distance_hypotheses(n, q, p, lambda);
                    if (!h.holds()) {
                        row.status = "excluded(" + h.first_failure().value_or("?") + ")";
                        report.rows.push_back(std::move(row));
                        continue;
                    }
                    row.bound = h.implied_bound();
                    const auto r = search_max(SearchProblem{n, q, DistanceCongruent{lambda, p}, std::nullopt}, options);
                    settle(row, r.max_size);
                    report.rows.push_back(std::move(row));
                }
            }
            for (std::size_t s = 1; s <= std::min(n, s_max); ++s) {
                SweepRow row;
                row.family = "distance-count";
                row.n = n;
                row.q = q;
                row.s = s;
                row.bound = delsarte_bound(n, q, s);
                settle(row, search_max_distance_count(n, q, s, options).max_size);
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

} // namespace extremal
