#include "oracle.hpp"

#include <map>
#include <numeric>
#include <utility>

namespace oracle {

using sympspin::LinearOperator;
using sympspin::SpinorMonomial;
using sympspin::SpinorPoly;

namespace {

bool is_zero(const Complex& c) { return c.re == 0 && c.im == 0; }

Complex mul(const Complex& a, const Complex& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

Complex inv(const Complex& a) {
    mpq_class d = a.re * a.re + a.im * a.im;
    return {a.re / d, -a.im / d};
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

std::size_t dense_rank(std::vector<std::vector<Complex>> m) {
    if (m.empty()) {
        return 0;
    }
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m[p][c])) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        Complex pivInv = inv(m[r][c]);
        for (std::size_t k = c; k < cols; ++k) {
            m[r][k] = mul(m[r][k], pivInv);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) {
                continue;
            }
            Complex f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) {
                Complex t = mul(f, m[r][k]);
                m[i][k].re -= t.re;
                m[i][k].im -= t.im;
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank_of_images(const std::vector<std::vector<SpinorPoly>>& columns) {
    // Row key: (operator index, monomial).
    std::map<std::pair<std::size_t, SpinorMonomial>, std::size_t> rowOf;
    std::vector<std::vector<std::pair<std::size_t, Complex>>> entries(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (std::size_t k = 0; k < columns[c].size(); ++k) {
            for (const auto& t : columns[c][k].terms()) {
                auto key = std::make_pair(k, t.mono);
                auto it = rowOf.find(key);
                if (it == rowOf.end()) {
                    it = rowOf.emplace(key, rowOf.size()).first;
                }
                entries[c].push_back({it->second, Complex{t.coef.re(), t.coef.im()}});
            }
        }
    }
    // Columns sharing a row are joined; the matrix is block diagonal over
    // the resulting components.
    std::vector<std::size_t> parent(columns.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::ptrdiff_t> firstCol(rowOf.size(), -1);
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (const auto& [row, v] : entries[c]) {
            if (firstCol[row] < 0) {
                firstCol[row] = static_cast<std::ptrdiff_t>(c);
            } else {
                parent[find(parent, c)] = find(parent, static_cast<std::size_t>(firstCol[row]));
            }
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        groups[find(parent, c)].push_back(c);
    }
    std::size_t total = 0;
    for (const auto& [root, cols] : groups) {
        std::map<std::size_t, std::size_t> localRow;
        for (std::size_t c : cols) {
            for (const auto& [row, v] : entries[c]) {
                localRow.emplace(row, localRow.size());
            }
        }
        if (localRow.empty()) {
            continue;
        }
        std::vector<std::vector<Complex>> m(localRow.size(), std::vector<Complex>(cols.size()));
        for (std::size_t k = 0; k < cols.size(); ++k) {
            for (const auto& [row, v] : entries[cols[k]]) {
                Complex& cell = m[localRow[row]][k];
                cell.re += v.re;
                cell.im += v.im;
            }
        }
        total += dense_rank(std::move(m));
    }
    return total;
}

std::vector<SpinorMonomial> sector_monomials(int n, int h, int Q, int parity) {
    std::vector<SpinorMonomial> out;
    // Odometer over all exponent vectors with the bounds; filter by degree.
    std::vector<std::vector<int>> xs, qs;
    std::vector<int> cur(2 * n, 0);
    while (true) {
        int d = std::accumulate(cur.begin(), cur.end(), 0);
        if (d == h) {
            xs.push_back(cur);
        }
        std::size_t k = 0;
        while (k < cur.size() && cur[k] == h) {
            cur[k++] = 0;
        }
        if (k == cur.size()) {
            break;
        }
        ++cur[k];
    }
    std::vector<int> qc(n, 0);
    while (true) {
        int d = std::accumulate(qc.begin(), qc.end(), 0);
        if (d <= Q && (parity < 0 || d % 2 == parity)) {
            qs.push_back(qc);
        }
        std::size_t k = 0;
        while (k < qc.size() && qc[k] == Q) {
            qc[k++] = 0;
        }
        if (k == qc.size()) {
            break;
        }
        ++qc[k];
    }
    for (const auto& a : xs) {
        for (const auto& c : qs) {
            out.emplace_back(n, a, c);
        }
    }
    return out;
}

std::size_t kernel_dim(const std::vector<LinearOperator>& ops, int n, int h, int Q, int parity) {
    auto monos = sector_monomials(n, h, Q, parity);
    std::vector<std::vector<SpinorPoly>> columns;
    for (const auto& m : monos) {
        std::vector<SpinorPoly> images;
        SpinorPoly s = SpinorPoly::monomial(m);
        for (const auto& op : ops) {
            images.push_back(op.apply(s));
        }
        columns.push_back(std::move(images));
    }
    return monos.size() - rank_of_images(columns);
}

std::size_t image_rank(const LinearOperator& op, int n, int h, int Q, int parity) {
    auto monos = sector_monomials(n, h, Q, parity);
    return monos.size() - kernel_dim({op}, n, h, Q, parity);
}

}  // namespace oracle
