#include "core/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"

namespace polysft {

Lattice::Lattice(const IntMat& basis_rows) {
    if (basis_rows.empty()) fail(ErrorCode::Lattice, "empty lattice basis");
    n_ = static_cast<int>(basis_rows[0].size());
    for (const auto& row : basis_rows)
        if (static_cast<int>(row.size()) != n_) fail(ErrorCode::Lattice, "ragged lattice basis");
    basis_ = hnf_rows(basis_rows, n_);
}

std::int64_t Lattice::index() const {
    std::int64_t p = 1;
    for (int i = 0; i < n_; ++i) p *= basis_[i][i];
    return p;
}

IntVec Lattice::reduce(IntVec v) const {
    for (int i = 0; i < n_; ++i) {
        std::int64_t q = floor_div(v[i], basis_[i][i]);
        if (q == 0) continue;
        for (int j = i; j < n_; ++j) v[j] -= q * basis_[i][j];
    }
    return v;
}

bool Lattice::contains(const IntVec& v) const {
    IntVec w = v;
    for (int i = 0; i < n_; ++i) {
        if (w[i] % basis_[i][i] != 0) return false;
        std::int64_t q = w[i] / basis_[i][i];
        for (int j = i; j < n_; ++j) w[j] -= q * basis_[i][j];
    }
    return true;
}

std::vector<IntVec> Lattice::residues() const {
    std::vector<IntVec> out;
    out.reserve(static_cast<std::size_t>(index()));
    IntVec v(n_, 0);
    while (true) {
        out.push_back(v);
        int i = n_ - 1;
        while (i >= 0 && v[i] + 1 == basis_[i][i]) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

std::size_t Lattice::residue_index(const IntVec& canonical) const {
    std::size_t idx = 0;
    for (int i = 0; i < n_; ++i) idx = idx * static_cast<std::size_t>(basis_[i][i]) +
                                        static_cast<std::size_t>(canonical[i]);
    return idx;
}

std::string Lattice::to_text() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        if (i) os << ';';
        for (int j = 0; j < n_; ++j) {
            if (j) os << ',';
            os << basis_[i][j];
        }
    }
    return os.str();
}

Lattice Lattice::from_text(const std::string& text, int expected_dim) {
    IntMat rows;
    std::stringstream ss(text);
    std::string row_text;
    while (std::getline(ss, row_text, ';')) {
        IntVec row;
        std::stringstream rs(row_text);
        std::string cell;
        while (std::getline(rs, cell, ',')) {
            try {
                std::size_t pos = 0;
                row.push_back(std::stoll(cell, &pos));
                while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
                if (pos != cell.size()) fail(ErrorCode::Parse, "bad lattice entry: " + cell);
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                fail(ErrorCode::Parse, "bad lattice entry: " + cell);
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(ErrorCode::Parse, "empty lattice text");
    if (expected_dim && static_cast<int>(rows[0].size()) != expected_dim)
        fail(ErrorCode::Lattice, "lattice dimension does not match group rank");
    return Lattice(rows);
}

std::vector<Lattice> enumerate_lattices(int n, std::int64_t max_index) {
    if (max_index < 1) fail(ErrorCode::Usage, "max_index must be >= 1");
    std::vector<Lattice> out;
    IntVec diag(n, 1);
    // Recursive odometer over diagonals with product <= max_index, then over
    // the above-diagonal entries 0 <= h[j][i] < h[i][i].
    std::vector<IntMat> bases;
    auto emit_offdiag = [&](auto&& self, IntMat& h, int col) -> void {
        if (col == n) {
            bases.push_back(h);
            return;
        }
        auto fill = [&](auto&& fillself, int row) -> void {
            if (row == col) {
                self(self, h, col + 1);
                return;
            }
            for (std::int64_t v = 0; v < h[col][col]; ++v) {
                h[row][col] = v;
                fillself(fillself, row + 1);
            }
            h[row][col] = 0;
        };
        fill(fill, 0);
    };
    auto rec_diag = [&](auto&& self, int i, std::int64_t prod) -> void {
        if (i == n) {
            IntMat h(n, IntVec(n, 0));
            for (int k = 0; k < n; ++k) h[k][k] = diag[k];
            emit_offdiag(emit_offdiag, h, 0);
            return;
        }
        for (std::int64_t d = 1; prod * d <= max_index; ++d) {
            diag[i] = d;
            self(self, i + 1, prod * d);
        }
        diag[i] = 1;
    };
    rec_diag(rec_diag, 0, 1);
    std::sort(bases.begin(), bases.end(), [](const IntMat& a, const IntMat& b) {
        std::int64_t ia = 1, ib = 1;
        for (std::size_t k = 0; k < a.size(); ++k) { ia *= a[k][k]; ib *= b[k][k]; }
        if (ia != ib) return ia < ib;
        return a < b;
    });
    out.reserve(bases.size());
    for (auto& b : bases) out.emplace_back(b);
    return out;
}

} // namespace polysft
