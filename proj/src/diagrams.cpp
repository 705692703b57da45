#include "superhowe/diagrams.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace howe {

int MarkedDiagram::count() const {
    return static_cast<int>(std::count_if(mark.begin(), mark.end(), [](int r) { return r > 0; }));
}

std::string MarkedDiagram::ascii() const {
    // grid of boxes with X in each marked cell
    std::string out;
    const std::string rule = [&] {
        std::string r;
        for (int c = 0; c < cols; ++c) r += "+---";
        r += "+\n";
        return r;
    }();
    for (int r = 1; r <= rows; ++r) {
        out += rule;
        for (int c = 0; c < cols; ++c) out += (mark[static_cast<std::size_t>(c)] == r) ? "| X " : "|   ";
        out += "|\n";
    }
    out += rule;
    return out;
}

std::vector<MarkedDiagram> marked_diagrams(int m, int r) {
    if (m < 0 || r < 0) throw std::invalid_argument("marked_diagrams: negative size");
    std::vector<MarkedDiagram> out;
    MarkedDiagram d{m, r, std::vector<int>(static_cast<std::size_t>(r), 0)};
    for (;;) {
        out.push_back(d);
        int c = r - 1;
        while (c >= 0 && d.mark[static_cast<std::size_t>(c)] == m) {
            d.mark[static_cast<std::size_t>(c)] = 0;
            --c;
        }
        if (c < 0) break;
        ++d.mark[static_cast<std::size_t>(c)];
    }
    return out;
}

int MarkedFamily::total_marks() const {
    int t = 0;
    for (const MarkedDiagram& d : diagrams) t += d.count();
    return t;
}

std::vector<int> MarkedFamily::marks_per_diagram() const {
    std::vector<int> d;
    d.reserve(diagrams.size());
    for (const MarkedDiagram& dg : diagrams) d.push_back(dg.count());
    return d;
}

std::vector<int> MarkedFamily::marks_per_column() const {
    const int w = diagrams.empty() ? 0 : diagrams.front().cols;
    std::vector<int> e(static_cast<std::size_t>(w), 0);
    for (const MarkedDiagram& d : diagrams)
        for (int c = 0; c < d.cols; ++c)
            if (d.mark[static_cast<std::size_t>(c)] > 0) ++e[static_cast<std::size_t>(c)];
    return e;
}

std::vector<int> MarkedFamily::marks_per_row() const {
    const int m = diagrams.empty() ? 0 : diagrams.front().rows;
    std::vector<int> f(static_cast<std::size_t>(m), 0);
    for (const MarkedDiagram& d : diagrams)
        for (int c = 0; c < d.cols; ++c) {
            const int r = d.mark[static_cast<std::size_t>(c)];
            if (r > 0) ++f[static_cast<std::size_t>(r - 1)];
        }
    return f;
}

bool MarkedFamily::cross_valid() const {
    std::set<std::pair<int, int>> seen;  // (row, column)
    for (const MarkedDiagram& d : diagrams)
        for (int c = 0; c < d.cols; ++c) {
            const int r = d.mark[static_cast<std::size_t>(c)];
            if (r > 0 && !seen.insert({r, c + 1}).second) return false;
        }
    return true;
}

int MarkedFamily::sign_eps() const {
    // mark triples (diagram i, column s, row k); compare the (i,s,k)- and
    // (s,k,i)-lexicographic arrangements of the associated odd indeterminates
    std::vector<std::tuple<int, int, int>> isk;
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
        const MarkedDiagram& d = diagrams[i];
        for (int c = 0; c < d.cols; ++c) {
            const int r = d.mark[static_cast<std::size_t>(c)];
            if (r > 0) isk.emplace_back(static_cast<int>(i + 1), c + 1, r);
        }
    }
    std::vector<std::tuple<int, int, int>> ski;
    ski.reserve(isk.size());
    for (const auto& [i, s, k] : isk) ski.emplace_back(s, k, i);
    std::sort(ski.begin(), ski.end());
    // position of each (i,s,k)-ordered element inside the (s,k,i) order
    std::vector<int> perm;
    perm.reserve(isk.size());
    for (const auto& [i, s, k] : isk) {
        const auto it = std::lower_bound(ski.begin(), ski.end(), std::make_tuple(s, k, i));
        perm.push_back(static_cast<int>(it - ski.begin()));
    }
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<MarkedFamily> marked_families(const std::vector<int>& widths, int m) {
    for (std::size_t i = 1; i < widths.size(); ++i)
        if (widths[i] > widths[i - 1])
            throw std::invalid_argument("marked_families: widths must weakly decrease");
    std::vector<MarkedFamily> out;
    MarkedFamily fam;
    std::set<std::pair<int, int>> used;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == widths.size()) {
            out.push_back(fam);
            return;
        }
        for (const MarkedDiagram& d : marked_diagrams(m, widths[idx])) {
            std::vector<std::pair<int, int>> added;
            bool ok = true;
            for (int c = 0; c < d.cols && ok; ++c) {
                const int r = d.mark[static_cast<std::size_t>(c)];
                if (r > 0) {
                    if (!used.insert({r, c + 1}).second)
                        ok = false;
                    else
                        added.emplace_back(r, c + 1);
                }
            }
            if (ok) {
                fam.diagrams.push_back(d);
                self(self, idx + 1);
                fam.diagrams.pop_back();
            }
            for (const auto& pr : added) used.erase(pr);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Pairing> pairings(int two_l) {
    if (two_l < 0 || two_l % 2 != 0) throw std::invalid_argument("pairings: size must be even");
    std::vector<Pairing> out;
    std::vector<bool> taken(static_cast<std::size_t>(two_l + 1), false);
    std::vector<std::pair<int, int>> acc;
    auto rec = [&](auto&& self) -> void {
        int first = -1;
        for (int i = 1; i <= two_l; ++i)
            if (!taken[static_cast<std::size_t>(i)]) {
                first = i;
                break;
            }
        if (first < 0) {
            std::vector<int> seq;
            for (const auto& [a, b] : acc) {
                seq.push_back(a);
                seq.push_back(b);
            }
            int inv = 0;
            for (std::size_t a = 0; a < seq.size(); ++a)
                for (std::size_t b = a + 1; b < seq.size(); ++b)
                    if (seq[a] > seq[b]) ++inv;
            out.push_back(Pairing{acc, inv % 2 == 0 ? 1 : -1});
            return;
        }
        taken[static_cast<std::size_t>(first)] = true;
        for (int j = first + 1; j <= two_l; ++j) {
            if (taken[static_cast<std::size_t>(j)]) continue;
            taken[static_cast<std::size_t>(j)] = true;
            acc.emplace_back(first, j);
            self(self);
            acc.pop_back();
            taken[static_cast<std::size_t>(j)] = false;
        }
        taken[static_cast<std::size_t>(first)] = false;
    };
    rec(rec);
    return out;
}

}  // namespace howe
