#include "ktlift/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "ktlift/cache.hpp"
#include "ktlift/errors.hpp"

namespace ktlift {

bool is_partition(const Part& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

int part_size(const Part& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

int part_at(const Part& p, int i) {
    return (i >= 0 && i < static_cast<int>(p.size())) ? p[i] : 0;
}

Part conjugate(const Part& p) {
    Part c;
    if (p.empty()) return c;
    c.resize(p[0]);
    for (int j = 0; j < p[0]; ++j) {
        int cnt = 0;
        for (int row : p)
            if (row > j) ++cnt;
        c[j] = cnt;
    }
    return c;
}

bool contains(const Part& outer, const Part& inner) {
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (part_at(outer, static_cast<int>(i)) < inner[i]) return false;
    return true;
}

bool all_rows_even(const Part& p) {
    return std::all_of(p.begin(), p.end(), [](int r) { return r % 2 == 0; });
}

std::string part_to_string(const Part& p) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    os << ']';
    return os.str();
}

Part part_from_string(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') fail(ErrKind::InvalidParams, "unbalanced brackets in partition " + s);
        body = body.substr(1, body.size() - 2);
    }
    Part p;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        p.push_back(std::stoi(tok));
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (!is_partition(p)) fail(ErrKind::InvalidParams, "not a partition: " + s);
    return p;
}

namespace {

void gen_partitions(int n, int max_depth, int max_part, Part& cur,
                    std::vector<Part>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) >= max_depth) return;
    int hi = std::min(n, max_part);
    for (int k = hi; k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, max_depth, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Part> partitions_of(int n, int max_depth, int max_part) {
    std::vector<Part> out;
    if (n < 0 || max_depth < 0) return out;
    if (max_part < 0) max_part = n;
    Part cur;
    gen_partitions(n, max_depth, max_part, cur, out);
    return out;
}

std::vector<Part> partitions_up_to(int max_size, int max_depth) {
    std::vector<Part> out;
    for (int n = 0; n <= max_size; ++n) {
        auto ps = partitions_of(n, max_depth);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

namespace {

// Counts LR skew tableaux of shape lam/mu, content nu. Cells are filled
// in the order of the reverse reading word (each row right-to-left, rows
// top-to-bottom) so the ballot condition can be checked incrementally.
struct LrCounter {
    const Part& lam;
    const Part& mu;
    const Part& nu;
    std::vector<std::pair<int, int>> cells; // reverse-reading order
    std::vector<std::vector<int>> fill;     // 0 = empty
    std::vector<int> count;                 // letters used so far, 1-based
    std::int64_t total = 0;

    LrCounter(const Part& l, const Part& m, const Part& n)
        : lam(l), mu(m), nu(n) {
        int rows = part_depth(lam);
        fill.resize(rows);
        for (int i = 0; i < rows; ++i) {
            fill[i].assign(lam[i], 0);
            for (int j = lam[i] - 1; j >= part_at(mu, i); --j)
                cells.emplace_back(i, j);
        }
        count.assign(nu.size() + 1, 0);
    }

    void run() { place(0); }

    void place(std::size_t idx) {
        if (idx == cells.size()) {
            total += 1;
            return;
        }
        auto [row, col] = cells[idx];
        int upper = (row > 0 && col < static_cast<int>(fill[row - 1].size()))
                        ? fill[row - 1][col]
                        : 0; // 0 also when the cell above belongs to mu
        int right = (col + 1 < static_cast<int>(fill[row].size()))
                        ? fill[row][col + 1]
                        : 0;
        int nletters = static_cast<int>(nu.size());
        for (int v = 1; v <= nletters; ++v) {
            if (count[v] >= nu[v - 1]) continue;      // content bound
            if (right != 0 && v > right) continue;    // rows weakly increase
            if (upper != 0 && v <= upper) continue;   // columns strictly increase
            if (v > 1 && count[v] >= count[v - 1]) continue; // ballot
            fill[row][col] = v;
            ++count[v];
            place(idx + 1);
            --count[v];
            fill[row][col] = 0;
        }
    }
};

} // namespace

std::int64_t lr_coeff(const Part& lam, const Part& mu, const Part& nu) {
    if (part_size(lam) != part_size(mu) + part_size(nu)) return 0;
    if (!contains(lam, mu) || !contains(lam, nu)) return 0;
    if (part_size(nu) == 0) return 1;

    std::string key = part_to_string(lam) + "|" + part_to_string(mu) + "|" +
                      part_to_string(nu);
    std::int64_t cached;
    if (lr_cache::lookup(key, cached)) return cached;

    LrCounter counter(lam, mu, nu);
    counter.run();
    lr_cache::insert(key, counter.total);
    return counter.total;
}

std::int64_t gl_dim(const Part& mu, int k) {
    if (part_depth(mu) > k) return 0;
    // hook content formula: prod over cells (i,j) of (k + j - i) / hook(i,j)
    Part conj = conjugate(mu);
    std::int64_t num = 1, den = 1;
    for (int i = 0; i < part_depth(mu); ++i) {
        for (int j = 0; j < mu[i]; ++j) {
            num *= k + j - i;
            den *= (mu[i] - j) + (conj[j] - i) - 1;
            std::int64_t g = std::gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    if (den != 1) std::abort();
    return num;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace ktlift
