#include "gosset/canonical.hpp"

#include <algorithm>
#include <functional>

namespace gosset {

std::size_t CanonicalCertificate::hash() const {
    std::size_t h = 1469598103934665603ULL ^ vertexCount;
    for (std::uint64_t w : adjacencyBits) {
        h ^= w;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string CanonicalCertificate::hexDigest() const {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = hash();
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

namespace {

using Partition = std::vector<std::vector<int>>;

struct Searcher {
    const Graph& g;
    int m;
    std::vector<Bitset> rows;

    // Best leaf so far: invariant trace, certificate, and labelling.
    bool haveBest = false;
    std::vector<std::uint64_t> bestTrace;
    CanonicalCertificate bestCert;
    std::vector<int> bestLabel; // position -> vertex

    std::vector<std::vector<int>> automorphisms; // vertex -> vertex

    explicit Searcher(const Graph& graph) : g(graph), m(graph.vertexCount()) {
        for (int v = 0; v < m; ++v) rows.push_back(graph.neighbours(v));
    }

    // Equitable refinement; returns a label-invariant trace value describing
    // the splits performed.
    std::uint64_t refine(Partition& cells) const {
        std::uint64_t trace = 1469598103934665603ULL;
        auto feed = [&](std::uint64_t x) {
            trace ^= x + 0x9e3779b97f4a7c15ULL;
            trace *= 1099511628211ULL;
        };
        std::size_t next = 0; // cells before `next` have been used as splitters
        while (next < cells.size()) {
            Bitset splitter(m);
            for (int v : cells[next]) splitter.set(v);
            ++next;
            std::size_t cellCount = cells.size();
            for (std::size_t d = 0; d < cellCount; ++d) {
                if (cells[d].size() <= 1) continue;
                // Group by neighbour count into the splitter.
                std::vector<std::pair<int, int>> keyed; // (count, vertex)
                keyed.reserve(cells[d].size());
                bool uniform = true;
                for (int v : cells[d]) {
                    int cnt = splitter.intersectionCount(rows[v]);
                    if (!keyed.empty() && cnt != keyed.front().first) uniform = false;
                    keyed.emplace_back(cnt, v);
                }
                if (uniform) continue;
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                // First group replaces cell d, the rest are appended.
                std::vector<std::vector<int>> groups;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) {
                        groups.emplace_back();
                        feed(static_cast<std::uint64_t>(keyed[i].first) << 20);
                    }
                    groups.back().push_back(keyed[i].second);
                }
                feed(d);
                for (const auto& grp : groups) feed(grp.size());
                cells[d] = groups.front();
                for (std::size_t k = 1; k < groups.size(); ++k)
                    cells.push_back(groups[k]);
            }
        }
        for (const auto& cell : cells) feed(cell.size());
        return trace;
    }

    CanonicalCertificate certOf(const std::vector<int>& label) const {
        CanonicalCertificate cert;
        cert.vertexCount = static_cast<std::uint32_t>(m);
        long long bits = static_cast<long long>(m) * (m - 1) / 2;
        cert.adjacencyBits.assign(static_cast<std::size_t>((bits + 63) / 64), 0);
        long long bit = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j, ++bit)
                if (g.adjacent(label[i], label[j]))
                    cert.adjacencyBits[bit >> 6] |= std::uint64_t{1} << (bit & 63);
        return cert;
    }

    // Orbit representative check among automorphisms fixing `prefix`.
    std::vector<int> orbitIds(const std::vector<int>& prefix) const {
        std::vector<int> parent(m);
        for (int v = 0; v < m; ++v) parent[v] = v;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& a : automorphisms) {
            bool fixes = true;
            for (int p : prefix)
                if (a[p] != p) { fixes = false; break; }
            if (!fixes) continue;
            for (int v = 0; v < m; ++v) {
                int ra = find(v), rb = find(a[v]);
                if (ra != rb) parent[ra] = rb;
            }
        }
        std::vector<int> ids(m);
        for (int v = 0; v < m; ++v) ids[v] = find(v);
        return ids;
    }

    void search(Partition cells, std::vector<std::uint64_t> trace, std::vector<int>& prefix) {
        trace.push_back(refine(cells));

        if (haveBest) {
            std::size_t depth = trace.size() - 1;
            if (depth < bestTrace.size()) {
                if (trace[depth] > bestTrace[depth]) return; // worse branch
                if (trace[depth] < bestTrace[depth]) haveBest = false; // better; drop best
            } else {
                // Strict extension of the best trace is lexicographically worse.
                return;
            }
        }

        // Discrete?
        int target = -1;
        std::size_t targetSize = 0;
        for (std::size_t d = 0; d < cells.size(); ++d)
            if (cells[d].size() > 1 && (target < 0 || cells[d].size() < targetSize)) {
                target = static_cast<int>(d);
                targetSize = cells[d].size();
            }

        if (target < 0) {
            std::vector<int> label;
            label.reserve(m);
            for (const auto& cell : cells) label.push_back(cell.front());
            CanonicalCertificate cert = certOf(label);
            if (!haveBest || std::make_pair(trace, cert.adjacencyBits) <
                                 std::make_pair(bestTrace, bestCert.adjacencyBits)) {
                haveBest = true;
                bestTrace = trace;
                bestCert = cert;
                bestLabel = label;
            } else if (trace == bestTrace && cert == bestCert) {
                // Two labelings with the same certificate give an automorphism.
                std::vector<int> a(m);
                for (int i = 0; i < m; ++i) a[bestLabel[i]] = label[i];
                bool identity = true;
                for (int v = 0; v < m; ++v)
                    if (a[v] != v) { identity = false; break; }
                if (!identity && automorphisms.size() < 64) automorphisms.push_back(a);
            }
            return;
        }

        std::vector<int> candidates = cells[target];
        std::vector<int> tried;
        for (int v : candidates) {
            if (!tried.empty()) {
                std::vector<int> orbit = orbitIds(prefix);
                bool skip = false;
                for (int u : tried)
                    if (orbit[u] == orbit[v]) { skip = true; break; }
                if (skip) continue;
            }
            tried.push_back(v);
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t d = 0; d < cells.size(); ++d) {
                if (static_cast<int>(d) == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int u : cells[d])
                        if (u != v) rest.push_back(u);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[d]);
                }
            }
            prefix.push_back(v);
            search(std::move(child), trace, prefix);
            prefix.pop_back();
        }
    }
};

} // namespace

CanonicalCertificate canonicalForm(const Graph& g) {
    int m = g.vertexCount();
    CanonicalCertificate empty;
    if (m == 0) return empty;
    Searcher s(g);
    Partition init(1);
    for (int v = 0; v < m; ++v) init[0].push_back(v);
    std::vector<int> prefix;
    s.search(std::move(init), {}, prefix);
    return s.bestCert;
}

CanonicalCertificate canonicalForm(const InducedSubcomplex& c) {
    return canonicalForm(c.parent->graph->induced(c.selected));
}

} // namespace gosset
