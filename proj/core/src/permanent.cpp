#include "pernull/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace pernull {

using boost::multiprecision::cpp_rational;

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ArgumentError("IntMatrix: ragged initializer");
        for (auto v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::shifted_adjacency(const Graph& g, long long x) {
    const auto n = g.order();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = x;
        for (Vertex j : g.neighbors(static_cast<Vertex>(i))) m(i, static_cast<std::size_t>(j)) = -1;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Ryser

namespace {

using Int128 = __int128;

// Sum of |row| over the columns, or -1 if some entry does not fit in 32 bits.
long long max_abs_row_sum(const IntMatrix& m) {
    long long best = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        long long row = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& a = m(i, j);
            if (boost::multiprecision::abs(a) > 0x7fffffff) return -1;
            row += std::llabs(a.convert_to<long long>());
        }
        best = std::max(best, row);
    }
    return best;
}

template <typename Acc, typename Entry>
Acc ryser(const std::vector<Entry>& entries, std::size_t n) {
    // entries is row-major; row_sum[i] tracks sum_{j in S} a_ij for the Gray-code subset S.
    std::vector<Entry> row_sum(n, Entry{0});
    Acc total{0};
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
        const auto col = static_cast<std::size_t>(std::countr_zero(k));
        const std::uint64_t next = k ^ (k >> 1);
        const bool added = (next >> col) & 1U;
        for (std::size_t i = 0; i < n; ++i) {
            if (added) row_sum[i] += entries[i * n + col];
            else row_sum[i] -= entries[i * n + col];
        }
        gray = next;
        Acc prod{1};
        for (std::size_t i = 0; i < n; ++i) prod *= Acc(row_sum[i]);
        if (std::popcount(gray) % 2 == 1) total -= prod;
        else total += prod;
    }
    return n % 2 == 1 ? Acc(-total) : total;
}

}  // namespace

BigInt permanent(const IntMatrix& m, Guard guard) {
    if (m.rows() != m.cols())
        throw ArgumentError("permanent: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            ", not square");
    const auto n = m.rows();
    if (n > 62 || (guard == Guard::Enforce && n > kPermanentLimit))
        throw ScaleError("permanent: side " + std::to_string(n) + " exceeds the limit of " +
                         std::to_string(kPermanentLimit));
    if (n == 0) return 1;

    // Small entries: int64 row sums and a 128-bit accumulator when
    // 2^n * bound^n stays below 2^126.
    const long long bound = max_abs_row_sum(m);
    if (bound >= 0) {
        const double bits = static_cast<double>(n) * (std::log2(static_cast<double>(std::max(bound, 1LL))) + 1.0);
        if (bits < 125.0) {
            std::vector<long long> entries;
            entries.reserve(n * n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) entries.push_back(m(i, j).convert_to<long long>());
            Int128 r = ryser<Int128>(entries, n);
            bool neg = r < 0;
            unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-r) : static_cast<unsigned __int128>(r);
            BigInt out = static_cast<std::uint64_t>(mag >> 64);
            out <<= 64;
            out += static_cast<std::uint64_t>(mag);
            return neg ? BigInt(-out) : out;
        }
    }
    std::vector<BigInt> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries.push_back(m(i, j));
    return ryser<BigInt>(entries, n);
}

// ---------------------------------------------------------------------------
// PermPolynomial

std::size_t PermPolynomial::zero_root_multiplicity() const {
    std::size_t zeros = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend() && *it == 0; ++it) ++zeros;
    return zeros;
}

std::string PermPolynomial::to_string() const {
    std::ostringstream os;
    const auto n = degree();
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const BigInt& c = coeffs[k];
        if (c == 0) continue;
        const std::size_t power = n - k;
        BigInt mag = boost::multiprecision::abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || power == 0) os << mag;
        if (power >= 1) os << 'x';
        if (power >= 2) os << '^' << power;
    }
    if (first) os << '0';
    return os.str();
}

PermPolynomial multiply(const PermPolynomial& a, const PermPolynomial& b) {
    PermPolynomial out;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

// ---------------------------------------------------------------------------
// Interpolation

PermPolynomial perm_polynomial_interpolation(const Graph& g, Guard guard) {
    const auto n = g.order();
    if (guard == Guard::Enforce && n > kInterpolationLimit)
        throw ScaleError("perm_polynomial_interpolation: " + std::to_string(n) + " vertices exceeds the limit of " +
                         std::to_string(kInterpolationLimit));

    // Samples f(x) = per(xI - A) at x = 0..n, then Newton forward differences:
    // f(x) = sum_k delta^k f(0) * binom(x, k).
    std::vector<BigInt> diff(n + 1);
    for (std::size_t x = 0; x <= n; ++x)
        diff[x] = permanent(IntMatrix::shifted_adjacency(g, static_cast<long long>(x)), guard);
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t x = n; x >= k; --x) diff[x] -= diff[x - 1];

    // falling[j] holds the coefficient of x^j in x(x-1)...(x-k+1).
    std::vector<cpp_rational> monomial(n + 1, 0);
    std::vector<BigInt> falling{1};
    BigInt factorial = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) {
            factorial *= k;
            std::vector<BigInt> next(falling.size() + 1, 0);
            for (std::size_t j = 0; j < falling.size(); ++j) {
                next[j + 1] += falling[j];
                next[j] -= falling[j] * (k - 1);
            }
            falling = std::move(next);
        }
        for (std::size_t j = 0; j < falling.size(); ++j)
            monomial[j] += cpp_rational(diff[k] * falling[j], factorial);
    }

    PermPolynomial out;
    out.coeffs.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        if (boost::multiprecision::denominator(monomial[j]) != 1)
            throw InvariantViolation("perm_polynomial_interpolation: coefficient of x^" + std::to_string(j) +
                                     " is not an integer");
        out.coeffs[n - j] = boost::multiprecision::numerator(monomial[j]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sachs enumeration

namespace {

using Mask = std::uint64_t;
using Count = unsigned __int128;

constexpr std::size_t kSachsHardLimit = 34;  // n! must fit the 128-bit counters

struct SachsContext {
    std::size_t n;
    std::vector<Mask> nbr;

    explicit SachsContext(const Graph& g) : n(g.order()), nbr(g.order(), 0) {
        for (std::size_t v = 0; v < n; ++v)
            for (Vertex u : g.neighbors(static_cast<Vertex>(v))) nbr[v] |= Mask{1} << u;
    }

    /// Calls visit(path) for every cycle whose minimum vertex is `start` and whose
    /// other vertices lie in `pool`; each cycle is reported once, in the
    /// orientation whose second vertex is smaller than its last.
    void for_each_cycle(int start, Mask pool, const std::function<void(const std::vector<int>&)>& visit) const {
        std::vector<int> path{start};
        extend(start, pool, path, visit);
    }

    /// As for_each_cycle, but stops as soon as visit returns true. Returns
    /// whether it stopped early.
    bool find_cycle(int start, Mask pool, const std::function<bool(const std::vector<int>&)>& visit) const {
        std::vector<int> path{start};
        return extend_until(start, pool, path, visit);
    }

private:
    bool extend_until(int start, Mask pool, std::vector<int>& path,
                      const std::function<bool(const std::vector<int>&)>& visit) const {
        const int tail = path.back();
        for (Mask cand = nbr[static_cast<std::size_t>(tail)] & pool; cand; cand &= cand - 1) {
            const int next = std::countr_zero(cand);
            path.push_back(next);
            if (path.size() >= 3 && ((nbr[static_cast<std::size_t>(next)] >> start) & 1U) && path[1] < next &&
                visit(path))
                return true;
            if (extend_until(start, pool & ~(Mask{1} << next), path, visit)) return true;
            path.pop_back();
        }
        return false;
    }

    void extend(int start, Mask pool, std::vector<int>& path,
                const std::function<void(const std::vector<int>&)>& visit) const {
        const int tail = path.back();
        for (Mask cand = nbr[static_cast<std::size_t>(tail)] & pool; cand; cand &= cand - 1) {
            const int next = std::countr_zero(cand);
            path.push_back(next);
            if (path.size() >= 3 && ((nbr[static_cast<std::size_t>(next)] >> start) & 1U) && path[1] < next)
                visit(path);
            extend(start, pool & ~(Mask{1} << next), path, visit);
            path.pop_back();
        }
    }
};

Mask vertex_mask(const std::vector<int>& vs) {
    Mask m = 0;
    for (int v : vs) m |= Mask{1} << v;
    return m;
}

class SachsCounter {
public:
    explicit SachsCounter(const SachsContext& ctx) : ctx_(ctx) {}

    // counts[k] = sum over Sachs subgraphs on k vertices inside `open` of 2^cycles.
    const std::vector<Count>& counts(Mask open) {
        if (auto it = memo_.find(open); it != memo_.end()) return it->second;
        std::vector<Count> out(ctx_.n + 1, 0);
        if (open == 0) {
            out[0] = 1;
        } else {
            const int v = std::countr_zero(open);
            const Mask rest = open & ~(Mask{1} << v);
            add_shifted(out, counts(rest), 0, 1);
            for (Mask cand = ctx_.nbr[static_cast<std::size_t>(v)] & rest; cand; cand &= cand - 1)
                add_shifted(out, counts(rest & ~(Mask{1} << std::countr_zero(cand))), 2, 1);
            std::map<Mask, Count> cycles_by_support;
            ctx_.for_each_cycle(v, rest, [&](const std::vector<int>& cyc) { ++cycles_by_support[vertex_mask(cyc)]; });
            for (const auto& [support, multiplicity] : cycles_by_support)
                add_shifted(out, counts(open & ~support), static_cast<std::size_t>(std::popcount(support)),
                            2 * multiplicity);
        }
        return memo_.emplace(open, std::move(out)).first->second;
    }

private:
    void add_shifted(std::vector<Count>& out, const std::vector<Count>& in, std::size_t shift, Count weight) {
        for (std::size_t k = 0; k + shift < out.size(); ++k)
            if (in[k]) out[k + shift] += weight * in[k];
    }

    const SachsContext& ctx_;
    std::unordered_map<Mask, std::vector<Count>> memo_;
};

BigInt to_bigint(Count c) {
    BigInt out = static_cast<std::uint64_t>(c >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(c);
    return out;
}

void require_sachs_scale(const Graph& g, Guard guard, const char* who) {
    const auto n = g.order();
    if (n > kSachsHardLimit || (guard == Guard::Enforce && n > kSachsLimit))
        throw ScaleError(std::string(who) + ": " + std::to_string(n) + " vertices exceeds the limit of " +
                         std::to_string(kSachsLimit));
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

PermPolynomial perm_polynomial_sachs(const Graph& g, Guard guard) {
    require_sachs_scale(g, guard, "perm_polynomial_sachs");
    const SachsContext ctx(g);
    SachsCounter counter(ctx);
    const auto& counts = counter.counts(full_mask(g.order()));
    PermPolynomial out;
    out.coeffs.resize(g.order() + 1);
    for (std::size_t k = 0; k <= g.order(); ++k) {
        BigInt c = to_bigint(counts[k]);
        out.coeffs[k] = k % 2 == 1 ? BigInt(-c) : c;
    }
    return out;
}

std::size_t per_nullity_oracle(const Graph& g, Guard guard) {
    return perm_polynomial_sachs(g, guard).zero_root_multiplicity();
}

// ---------------------------------------------------------------------------
// Maximum Sachs subgraph

namespace {

class SachsSearch {
public:
    explicit SachsSearch(const SachsContext& ctx) : ctx_(ctx) {}

    void run(Mask open, std::size_t covered) {
        if (done()) return;
        if (found_ && covered + coverable(open) <= best_) return;
        if (open == 0) {
            if (!found_ || covered > best_) {
                best_ = covered;
                best_edges_ = edges_;
                best_cycles_ = cycles_;
                found_ = true;
            }
            return;
        }
        const int v = std::countr_zero(open);
        const Mask rest = open & ~(Mask{1} << v);
        if ((ctx_.nbr[static_cast<std::size_t>(v)] & rest) == 0) {
            run(rest, covered);
            return;
        }
        for (Mask cand = ctx_.nbr[static_cast<std::size_t>(v)] & rest; cand && !done(); cand &= cand - 1) {
            const int u = std::countr_zero(cand);
            edges_.push_back({v, u});
            run(rest & ~(Mask{1} << u), covered + 2);
            edges_.pop_back();
        }
        // Only odd cycles can beat the matchings already tried: an even cycle splits into two perfect matchings.
        if (done() || covered + coverable(open) <= best_) return;
        ctx_.find_cycle(v, rest, [&](const std::vector<int>& cyc) {
            if (cyc.size() % 2 == 0) return false;
            cycles_.push_back(cyc);
            run(open & ~vertex_mask(cyc), covered + cyc.size());
            cycles_.pop_back();
            return done();
        });
        run(rest, covered);
    }

    SachsSubgraph result() const {
        SachsSubgraph s{VertexSet(ctx_.n), best_edges_, {}};
        for (const auto& e : best_edges_) {
            s.covered.insert(e.u);
            s.covered.insert(e.v);
        }
        for (const auto& cyc : best_cycles_) {
            CycleInfo info;
            for (int v : cyc) {
                info.vertices.push_back(v);
                s.covered.insert(v);
            }
            s.cycles.push_back(std::move(info));
        }
        return s;
    }

private:
    bool done() const { return found_ && best_ == ctx_.n; }

    // Open vertices with an open neighbor; nothing else can still be covered.
    std::size_t coverable(Mask open) const {
        std::size_t count = 0;
        for (Mask m = open; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (ctx_.nbr[static_cast<std::size_t>(v)] & open) ++count;
        }
        return count;
    }

    const SachsContext& ctx_;
    std::size_t best_ = 0;
    bool found_ = false;
    std::vector<Edge> edges_, best_edges_;
    std::vector<std::vector<int>> cycles_, best_cycles_;
};

}  // namespace

SachsSubgraph max_sachs_subgraph(const Graph& g, Guard guard) {
    require_sachs_scale(g, guard, "max_sachs_subgraph");
    const SachsContext ctx(g);
    SachsSearch search(ctx);
    search.run(full_mask(g.order()), 0);
    return search.result();
}

bool is_sachs_subgraph_of(const SachsSubgraph& s, const Graph& g) {
    const auto n = g.order();
    if (s.covered.universe() != n) return false;
    std::vector<int> uses(n, 0);
    auto touch = [&](Vertex v) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) return false;
        return ++uses[static_cast<std::size_t>(v)] == 1;
    };
    for (const auto& e : s.edges)
        if (!g.has_edge(e.u, e.v) || !touch(e.u) || !touch(e.v)) return false;
    for (const auto& c : s.cycles) {
        if (c.length() < 3) return false;
        for (std::size_t i = 0; i < c.length(); ++i) {
            if (!touch(c.vertices[i])) return false;
            if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % c.length()])) return false;
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if ((uses[v] == 1) != s.covered.contains(static_cast<Vertex>(v))) return false;
    return true;
}

}  // namespace pernull
