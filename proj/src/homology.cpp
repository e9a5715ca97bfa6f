#include "gosset/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace gosset {

namespace {

constexpr long long kPrimes[2] = {2147483647LL, 2147483629LL};

long long powMod(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
long long invMod(long long a, long long p) { return powMod((a % p + p) % p, p - 2, p); }

struct Entry {
    int row;
    long long val;
};

// Rank of the boundary matrix from d-simplices (columns) to (d-1)-simplices
// (rows) over GF(p). Columns flagged in `clearedCols` are skipped; rows that
// end up as pivots are flagged in `pivotRows` for clearing one dimension
// down.
long long boundaryRankModP(const std::vector<SimplexKey>& rows,
                           const std::vector<SimplexKey>& cols,
                           const std::vector<char>& clearedCols,
                           std::vector<char>& pivotRows, long long p) {
    std::vector<int> pivotColOfRow(rows.size(), -1);
    std::vector<std::vector<Entry>> reduced;
    reduced.reserve(cols.size() / 4 + 16);
    long long rank = 0;

    int verts[9];
    std::vector<Entry> col, merged;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!clearedCols.empty() && clearedCols[j]) continue;
        col.clear();
        int m = unpackSimplex(cols[j], verts);
        for (int i = 0; i < m; ++i) {
            SimplexKey face = dropVertex(cols[j], i);
            auto it = std::lower_bound(rows.begin(), rows.end(), face);
            long long sign = (i % 2 == 0) ? 1 : p - 1;
            col.push_back({static_cast<int>(it - rows.begin()), sign});
        }
        std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });

        while (!col.empty()) {
            int low = col.back().row;
            int pc = pivotColOfRow[low];
            if (pc < 0) {
                pivotColOfRow[low] = static_cast<int>(reduced.size());
                reduced.push_back(col);
                pivotRows[low] = 1;
                ++rank;
                break;
            }
            const std::vector<Entry>& piv = reduced[pc];
            long long factor = (p - col.back().val) * invMod(piv.back().val, p) % p;
            merged.clear();
            std::size_t a = 0, b = 0;
            while (a < col.size() || b < piv.size()) {
                if (b == piv.size() || (a < col.size() && col[a].row < piv[b].row)) {
                    merged.push_back(col[a++]);
                } else if (a == col.size() || piv[b].row < col[a].row) {
                    merged.push_back({piv[b].row, piv[b].val * factor % p});
                    ++b;
                } else {
                    long long v = (col[a].val + piv[b].val * factor) % p;
                    if (v) merged.push_back({col[a].row, v});
                    ++a;
                    ++b;
                }
            }
            col.swap(merged);
        }
    }
    return rank;
}

// Exact rank over the rationals, used only if the two primes disagree.
long long exactRank(const std::vector<SimplexKey>& rows, const std::vector<SimplexKey>& cols) {
    using Big = boost::multiprecision::cpp_int;
    std::size_t nr = rows.size(), nc = cols.size();
    if (nr * nc > 4'000'000)
        throw std::runtime_error("modular ranks disagree on a matrix too large for exact fallback");
    std::vector<std::vector<Big>> m(nr, std::vector<Big>(nc, 0));
    int verts[9];
    for (std::size_t j = 0; j < nc; ++j) {
        int k = unpackSimplex(cols[j], verts);
        for (int i = 0; i < k; ++i) {
            SimplexKey face = dropVertex(cols[j], i);
            auto it = std::lower_bound(rows.begin(), rows.end(), face);
            m[it - rows.begin()][j] = (i % 2 == 0) ? 1 : -1;
        }
    }
    long long rank = 0;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < nc && pr < nr; ++pc) {
        std::size_t sel = pr;
        while (sel < nr && m[sel][pc] == 0) ++sel;
        if (sel == nr) continue;
        std::swap(m[sel], m[pr]);
        for (std::size_t r = pr + 1; r < nr; ++r) {
            if (m[r][pc] == 0) continue;
            Big f = m[r][pc];
            for (std::size_t c = pc; c < nc; ++c) m[r][c] = m[r][c] * m[pr][pc] - m[pr][c] * f;
        }
        ++pr;
        ++rank;
    }
    return rank;
}

} // namespace

BettiVector bettiNumbersFromTable(const SimplexTable& table, bool reduced) {
    BettiVector out;
    out.reduced = reduced;
    int top = table.maxDim();
    if (top < 0) {
        if (reduced) out.bTildeMinus1 = 1;
        return out;
    }

    // ranks[d] = rank of the boundary map from dimension d, for d in 1..top.
    std::vector<long long> ranks(top + 2, 0);
    std::vector<char> cleared; // columns of the dimension currently processed
    for (long long p : kPrimes) {
        std::vector<char> clearedNow, pivotRows;
        std::vector<long long> got(top + 2, 0);
        for (int d = top; d >= 1; --d) {
            pivotRows.assign(table.byDim[d - 1].size(), 0);
            got[d] = boundaryRankModP(table.byDim[d - 1], table.byDim[d], clearedNow,
                                      pivotRows, p);
            clearedNow.swap(pivotRows);
        }
        if (p == kPrimes[0]) {
            ranks = got;
        } else {
            for (int d = 1; d <= top; ++d)
                if (ranks[d] != got[d]) {
                    ranks[d] = exactRank(table.byDim[d - 1], table.byDim[d]);
                }
        }
    }
    (void)cleared;

    out.b.assign(top + 1, 0);
    long long n0 = table.count(0);
    if (reduced) {
        out.b[0] = n0 - 1 - ranks[1];
    } else {
        out.b[0] = n0 - ranks[1];
    }
    for (int k = 1; k <= top; ++k) out.b[k] = table.count(k) - ranks[k] - ranks[k + 1];
    while (!out.b.empty() && out.b.back() == 0) out.b.pop_back();
    return out;
}

BettiVector bettiNumbers(const InducedSubcomplex& c, bool reduced) {
    return bettiNumbersFromTable(cliquesByDimension(c), reduced);
}

} // namespace gosset
