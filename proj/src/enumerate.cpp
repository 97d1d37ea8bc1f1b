#include "minfact/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "minfact/errors.hpp"

namespace minfact {

namespace {

// Image tables in the hot path are raw vectors (img[i] = image of point i+1)
// so the search never allocates Permutation objects per node.
struct Candidate {
    std::vector<int> img;
    std::vector<int> inv;
};

// All a-cycles of S_n as image tables, ordered lexicographically by their
// canonical cycle word (m x2 ... xa), m = smallest moved point.
std::vector<Candidate> candidates_for(int n, int a) {
    std::vector<Candidate> out;
    std::vector<int> word;
    std::vector<bool> used(n + 1, false);

    auto commit = [&]() {
        Candidate c;
        c.img.resize(n);
        c.inv.resize(n);
        std::iota(c.img.begin(), c.img.end(), 1);
        for (int i = 0; i < a; ++i) {
            const int x = word[i];
            const int y = word[(i + 1) % a];
            c.img[x - 1] = y;
        }
        for (int i = 0; i < n; ++i) c.inv[c.img[i] - 1] = i + 1;
        out.push_back(std::move(c));
    };

    // word[0] = m stays the minimum: later positions only use points > m.
    auto extend = [&](auto&& self, int m) -> void {
        if (static_cast<int>(word.size()) == a) {
            commit();
            return;
        }
        for (int v = m + 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            word.push_back(v);
            self(self, m);
            word.pop_back();
            used[v] = false;
        }
    };

    for (int m = 1; m + a - 1 <= n; ++m) {
        word.assign(1, m);
        extend(extend, m);
    }
    return out;
}

int cycle_count(const std::vector<int>& img) {
    const int n = static_cast<int>(img.size());
    static thread_local std::vector<long long> stamp;
    static thread_local long long tick = 0;
    if (static_cast<int>(stamp.size()) < n) stamp.assign(n, 0);
    ++tick;
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (stamp[i] == tick) continue;
        ++cycles;
        for (int x = i; stamp[x] != tick; x = img[x] - 1) stamp[x] = tick;
    }
    return cycles;
}

// True iff img is exactly one cycle of length `len` and fixes the rest.
bool is_single_cycle(const std::vector<int>& img, int len) {
    const int n = static_cast<int>(img.size());
    int first = -1, moved = 0;
    for (int i = 0; i < n; ++i) {
        if (img[i] != i + 1) {
            ++moved;
            if (first < 0) first = i;
        }
    }
    if (moved != len) return false;
    int steps = 0;
    for (int x = first; steps == 0 || x != first; x = img[x] - 1) ++steps;
    return steps == len;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

class Search {
public:
    Search(const RamificationType& t, bool prune) : t_(t), n_(t.n), k_(t.k()), prune_(prune) {
        for (int j = 0; j < k_; ++j) cands_.push_back(candidates_for(n_, t.a[j]));
        // suffix_[i]: total defect the factors after depth i can still contribute
        suffix_.assign(k_ + 1, 0);
        for (int j = k_ - 1; j >= 0; --j) suffix_[j] = suffix_[j + 1] + (t.a[j] - 1);
        const Permutation sigma = canonical_sigma(t);
        rho_.assign(k_ + 1, std::vector<int>(n_));
        rho_[0] = sigma.image();
        chosen_.assign(k_, -1);
        last_.resize(n_);
    }

    // Called with the image tables of all k factors, in color order.
    using EmitFn = std::function<void(const std::vector<const std::vector<int>*>&)>;

    // first_offset/first_stride select a residue class of the first color's
    // candidates, which is how counting is split across workers.
    void run(size_t first_offset, size_t first_stride, const EmitFn* emit) {
        count = 0;
        nodes = 0;
        emit_ = emit;
        const auto& first = cands_[0];
        for (size_t idx = first_offset; idx < first.size(); idx += first_stride) {
            ++nodes;
            descend(0, idx);
        }
    }

    u128 count = 0;
    std::uint64_t nodes = 0;

private:
    void descend(int depth, size_t idx) {
        const Candidate& c = cands_[depth][idx];
        // Remaining requirement: whatever the factors after `depth` must
        // multiply to.  rho_{i+1} = rho_i . c^-1.
        auto& next = rho_[depth + 1];
        const auto& cur = rho_[depth];
        for (int i = 0; i < n_; ++i) next[i] = cur[c.inv[i] - 1];
        // A product of cycles can never lose more defect than its factors
        // carry, so once the requirement's defect exceeds the remaining
        // budget this branch is dead.
        if (prune_ && n_ - cycle_count(next) > suffix_[depth + 1]) return;
        chosen_[depth] = static_cast<int>(idx);
        dfs(depth + 1);
    }

    void dfs(int depth) {
        if (prune_ && depth == k_ - 1) {
            ++nodes;
            if (!is_single_cycle(rho_[depth], t_.a[depth])) return;
            last_ = rho_[depth];
            leaf();
            return;
        }
        if (depth == k_) {  // unpruned leaf: rho must have come down to id
            for (int i = 0; i < n_; ++i)
                if (rho_[k_][i] != i + 1) return;
            last_ = cands_[k_ - 1][chosen_[k_ - 1]].img;
            leaf();
            return;
        }
        for (size_t idx = 0; idx < cands_[depth].size(); ++idx) {
            ++nodes;
            descend(depth, idx);
        }
    }

    void leaf() {
        if (!transitive()) return;
        count = checked_add(count, 1);
        if (emit_ && *emit_) {
            std::vector<const std::vector<int>*> factors;
            for (int j = 0; j + 1 < k_; ++j) factors.push_back(&cands_[j][chosen_[j]].img);
            factors.push_back(&last_);
            (*emit_)(factors);
        }
    }

    bool transitive() {
        UnionFind uf(n_);
        auto add = [&](const std::vector<int>& img) {
            for (int i = 0; i < n_; ++i)
                if (img[i] != i + 1) uf.unite(i, img[i] - 1);
        };
        for (int j = 0; j + 1 < k_; ++j) add(cands_[j][chosen_[j]].img);
        add(last_);
        const int root = uf.find(0);
        for (int i = 1; i < n_; ++i)
            if (uf.find(i) != root) return false;
        return true;
    }

    const RamificationType& t_;
    int n_, k_;
    bool prune_;
    std::vector<std::vector<Candidate>> cands_;
    std::vector<int> suffix_;
    std::vector<std::vector<int>> rho_;
    std::vector<int> chosen_;
    std::vector<int> last_;
    const EmitFn* emit_ = nullptr;
};

void require_valid(const RamificationType& t) {
    const ValidationReport rep = validate(t);
    if (rep.ok) return;
    std::string msg = "invalid ramification type " + describe(t) + ":";
    for (const auto& v : rep.violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
}

}  // namespace

Factorization Factorization::create(const RamificationType& t,
                                    std::vector<Permutation> factors) {
    require_valid(t);
    if (static_cast<int>(factors.size()) != t.k())
        throw invariant_error("expected " + std::to_string(t.k()) + " factors");

    Factorization f{t, canonical_sigma(t), std::move(factors)};
    Permutation prod = Permutation::identity(t.n);
    int total_cycles = 0;
    for (int j = 0; j < t.k(); ++j) {
        const Permutation& fac = f.factors[j];
        if (fac.size() != t.n) throw invariant_error("factor size mismatch");
        const auto cys = cycles(fac);
        int longest = 0;
        for (const auto& cy : cys) longest = std::max(longest, static_cast<int>(cy.size()));
        if (longest != t.a[j] || fac.support_size() != t.a[j])
            throw invariant_error("factor " + std::to_string(j + 1) + " is not a single " +
                                  std::to_string(t.a[j]) + "-cycle: " + to_cycle_string(fac));
        total_cycles += static_cast<int>(cys.size());
        prod = compose(fac, prod);
    }
    if (!(prod == f.sigma))
        throw invariant_error("factor product " + to_cycle_string(prod) +
                              " differs from target " + to_cycle_string(f.sigma));

    UnionFind uf(t.n);
    for (const auto& fac : f.factors)
        for (int x = 1; x <= t.n; ++x)
            if (fac(x) != x) uf.unite(x - 1, fac(x) - 1);
    for (int i = 1; i < t.n; ++i)
        if (uf.find(i) != uf.find(0))
            throw invariant_error("factor supports do not connect all points");

    // Forced by the type arithmetic, but it costs nothing to keep honest:
    // minimality is exactly this cycle-count identity.
    total_cycles += static_cast<int>(cycles(f.sigma).size());
    if (total_cycles != t.k() * t.n - t.n + 2)
        throw invariant_error("total cycle count " + std::to_string(total_cycles) +
                              " is not kn-n+2");
    return f;
}

std::vector<Permutation> cycles_of_length(int n, int a) {
    if (n < 1 || a < 2 || a > n)
        throw std::invalid_argument("cycles_of_length requires 2 <= a <= n");
    std::vector<Permutation> out;
    for (auto& c : candidates_for(n, a)) out.emplace_back(std::move(c.img));
    return out;
}

void enumerate_minimal_factorizations(
    const RamificationType& t,
    const std::function<void(const Factorization&)>& emit,
    const CountOptions& opts) {
    require_valid(t);
    Search search(t, opts.use_pruning);
    Search::EmitFn fn = [&](const std::vector<const std::vector<int>*>& raw) {
        std::vector<Permutation> factors;
        factors.reserve(raw.size());
        for (const auto* img : raw) factors.emplace_back(*img);
        emit(Factorization::create(t, std::move(factors)));
    };
    search.run(0, 1, &fn);  // enumeration is always sequential and ordered
    if (opts.stats) {
        opts.stats->nodes += search.nodes;
        opts.stats->emitted += static_cast<std::uint64_t>(search.count);
    }
}

u128 count_minimal_factorizations(const RamificationType& t, const CountOptions& opts) {
    require_valid(t);
    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        Search search(t, opts.use_pruning);
        search.run(0, 1, nullptr);
        if (opts.stats) {
            opts.stats->nodes += search.nodes;
            opts.stats->emitted += static_cast<std::uint64_t>(search.count);
        }
        return search.count;
    }

    std::vector<Search> workers;
    workers.reserve(threads);
    for (int w = 0; w < threads; ++w) workers.emplace_back(t, opts.use_pruning);
    {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&workers, w, threads] {
                workers[w].run(static_cast<size_t>(w), static_cast<size_t>(threads), nullptr);
            });
        for (auto& th : pool) th.join();
    }
    // Exact integer addition: the merged total cannot depend on worker order.
    u128 total = 0;
    for (auto& wk : workers) {
        total = checked_add(total, wk.count);
        if (opts.stats) {
            opts.stats->nodes += wk.nodes;
            opts.stats->emitted += static_cast<std::uint64_t>(wk.count);
        }
    }
    return total;
}

std::vector<Factorization> all_minimal_factorizations(const RamificationType& t) {
    std::vector<Factorization> out;
    enumerate_minimal_factorizations(t, [&](const Factorization& f) { out.push_back(f); });
    return out;
}

nlohmann::ordered_json to_json(const Factorization& f) {
    nlohmann::ordered_json j;
    j["sigma"] = to_cycle_string(f.sigma);
    auto& arr = j["factors"] = nlohmann::ordered_json::array();
    for (const auto& fac : f.factors) arr.push_back(to_cycle_string(fac));
    return j;
}

}  // namespace minfact
